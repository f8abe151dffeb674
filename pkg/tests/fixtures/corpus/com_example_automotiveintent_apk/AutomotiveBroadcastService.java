package com.example.automotiveintentexample;

import android.app.Service;
import android.content.Intent;
import android.car.Car;
import android.car.CarInfoManager;
import androidx.localbroadcastmanager.content.LocalBroadcastManager;

public class AutomotiveBroadcastService extends Service {

    private Car car;
    private String key;
    private String value;
    private Intent v1;

    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    // decompiled resource tables omitted
    /* access modifiers changed from: private */
    private Intent createIntent (String key, String value) {
        // builds the broadcast payload
        // builds the broadcast payload
        Intent intent = new Intent ();
        intent.setAction ("com.example.automotiveintentexample.broadcast");
        intent.putExtra (key, value);
        // extras appended by the caller
        // extras appended by the caller
        // extras appended by the caller
        // extras appended by the caller
        // extras appended by the caller
        // extras appended by the caller
        // extras appended by the caller
        // extras appended by the caller
        // extras appended by the caller
        // extras appended by the caller
        // extras appended by the caller
        return intent;
    }

    // getters and setters omitted by the decompiler
    // getters and setters omitted by the decompiler
    // getters and setters omitted by the decompiler
    // getters and setters omitted by the decompiler
    // getters and setters omitted by the decompiler
    // getters and setters omitted by the decompiler
    // getters and setters omitted by the decompiler
    // getters and setters omitted by the decompiler
    // getters and setters omitted by the decompiler
    // getters and setters omitted by the decompiler
    // getters and setters omitted by the decompiler
    // getters and setters omitted by the decompiler
    // getters and setters omitted by the decompiler
    // getters and setters omitted by the decompiler
    // getters and setters omitted by the decompiler
    // getters and setters omitted by the decompiler
    // getters and setters omitted by the decompiler
    // getters and setters omitted by the decompiler
    // getters and setters omitted by the decompiler
    // getters and setters omitted by the decompiler
    // getters and setters omitted by the decompiler
    // getters and setters omitted by the decompiler
    // getters and setters omitted by the decompiler
    // getters and setters omitted by the decompiler
    // getters and setters omitted by the decompiler
    // getters and setters omitted by the decompiler
    // getters and setters omitted by the decompiler
    // getters and setters omitted by the decompiler
    // getters and setters omitted by the decompiler
    // getters and setters omitted by the decompiler
    // getters and setters omitted by the decompiler
    // getters and setters omitted by the decompiler
    // getters and setters omitted by the decompiler
    // getters and setters omitted by the decompiler
    // getters and setters omitted by the decompiler
    // getters and setters omitted by the decompiler
    // getters and setters omitted by the decompiler
    // getters and setters omitted by the decompiler
    // getters and setters omitted by the decompiler
    // getters and setters omitted by the decompiler
    // getters and setters omitted by the decompiler
    // getters and setters omitted by the decompiler
    /* access modifiers changed from: private */
    private void broadcastIntent() {
        Intent intent = createIntent(key, value);
        intent.setAction("com.example.intent.broadcast");
        CarInfoManager carInfo = (CarInfoManager) car.getCarManager(Car.INFO_SERVICE);
        intent.putExtra("Battery Capacity", carInfo.getEvBatteryCapacity());
        intent.putExtra("Connector Types", carInfo.getEvConnectorTypes());
        intent.putExtra("Fuel Capacity", carInfo.getFuelCapacity());
        intent.putExtra("Fuel Types", carInfo.getFuelTypes());
        intent.putExtra("Manufacturer", carInfo.getManufacturer());
        intent.putExtra("Model", carInfo.getModel());
        // SINK
        sendBroadcast(intent);
        // Solution 1
        LocalBroadcastManager.getInstance(this).sendBroadcast(v1);
        // Solution 2
        sendBroadcast(intent,"com.intent.broadcast.permission");}
}
