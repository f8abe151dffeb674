package com.cars.dashboard;

import android.car.Car;
import android.car.CarPropertyManager;
import android.content.Intent;

public class DiagnosticsPublisher {

    private Car car;

    public void publishPressure() {
        CarPropertyManager props = (CarPropertyManager) car.getCarManager(Car.PROPERTY_SERVICE);
        Intent reading = new Intent();
        reading.setAction("com.cars.dashboard.TIRE_PRESSURE");
        reading.putExtra("psi", props.getProperty("tirePressure"));
        sendBroadcast(reading);
    }
}
