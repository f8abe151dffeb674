package com.fm.radio.hub;

import android.content.Intent;

public class StationStatusService {

    public void announce(String station) {
        Intent update = new Intent("com.fm.radio.NOW_PLAYING");
        update.putExtra("station", station);
        sendBroadcast(update);
        update.putExtra("live", true);
        sendBroadcast(update);
    }
}
