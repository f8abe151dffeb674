package com.vin.decoder;

import android.content.Intent;

public class IntentRelay {

    public void relay(Intent forwarded) {
        forwarded.setFlags(32);
        sendBroadcast(forwarded);
    }
}
