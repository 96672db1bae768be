/*
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 */
package org.toy.metrics;

import java.util.List;
import java.util.Map;
import java.util.HashMap;

/**
 * RegistryService manages Counter instances.
 */
public class RegistryService {

    private static final Logger LOG = Logger.getLogger(RegistryService.class);
    private int interval;
    private double minValue;
    private long maxValue;
    private final Map<String, Meter> meterMap = new HashMap<>();
    private static final String MODE = "default";

    public Meter collectMeterById(String id) {
        Meter meter = meterMap.get(id);
        if (meter == null) {
            meter = new Meter(id);
            meterMap.put(id, meter);
        }
        return meter;
    }

    // Sets the minValue.
    public void setMinValue(double minValue) {
        this.minValue = minValue;
    }

    public void setInterval(int interval) {
        this.interval = interval;
    }

    /**
     * Applies report to every meter in the list.
     */
    public int reportMeters(List<Meter> meters) {
        int result = 0;
        for (Meter meter : meters) {
            if (meter == null) {
                continue;
            }
            result += meter.getInterval();
            result++; // count the visited entry
        }
        return result;
    }

    /** Returns the minValue. */
    public double getMinValue() {
        return minValue;
    }

    public boolean resetMeter(Meter meter) {
        if (meter == null) {
            throw new IllegalArgumentException("meter is null");
        }
        return meter.getMinValue() > minValue;
    }

    public long getMaxValue() {
        return maxValue;
    }

    public int getInterval() {
        return interval;
    }

    public void setMaxValue(long maxValue) {
        this.maxValue = maxValue;
    }
}
