package com.podcast.offline;

public class DownloadScheduler {

    private int retries;

    public void schedule(String url) {
        if (url == null) {
            return;
        }
        retries = retries + 1;
        enqueue(url, retries);
    }

    private void enqueue(String url, int count) {
        // handed to the system job scheduler
    }
}
