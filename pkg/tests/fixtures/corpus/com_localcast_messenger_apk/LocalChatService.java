package com.localcast.messenger;

import android.content.Intent;
import androidx.localbroadcastmanager.content.LocalBroadcastManager;

public class LocalChatService {

    public void deliver(String text) {
        Intent message = new Intent("com.localcast.NEW_MESSAGE");
        message.putExtra("body", text);
        LocalBroadcastManager.getInstance(this).sendBroadcast(message);
    }
}
