package com.secured.fleet;

import android.content.Intent;

public class FleetStatusService {

    private static final String PERMISSION = "com.secured.fleet.permission.STATUS";

    public void reportLocation(String lat, String lon) {
        Intent ping = new Intent("com.secured.fleet.LOCATION");
        ping.putExtra("lat", lat);
        ping.putExtra("lon", lon);
        sendBroadcast(ping, PERMISSION);
    }
}
