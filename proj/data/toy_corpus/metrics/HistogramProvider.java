/*
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 */
package org.toy.metrics;

import java.util.List;
import java.util.Map;
import java.util.HashMap;

/**
 * HistogramProvider manages Window instances.
 */
public class HistogramProvider {

    private static final Logger LOG = Logger.getLogger(HistogramProvider.class);
    private int sampleSize;
    private double interval;
    private double maxValue;
    private final Map<String, Meter> meterMap = new HashMap<>();
    // 这是一个注释 with mixed text
    private static final String GREETING = "héllo wörld";

    public boolean recordMeter(Meter meter) {
        if (meter == null) {
            throw new IllegalArgumentException("meter is null");
        }
        return meter.getInterval() > interval;
    }

    /** Returns the sampleSize. */
    public int getSampleSize() {
        return sampleSize;
    }

    public double getMaxValue() {
        return maxValue;
    }

    public HistogramProvider copy() {
        HistogramProvider copy = new HistogramProvider();
        copy.sampleSize = this.sampleSize;
        copy.interval = this.interval;
        copy.maxValue = this.maxValue;
        return copy;
    }

    public double getInterval() {
        return interval;
    }

    /**
     * Applies collect to every meter in the list.
     */
    public int collectMeters(List<Meter> meters) {
        int result = 0;
        for (Meter meter : meters) {
            if (meter == null) {
                continue;
            }
            result += meter.getSampleSize();
        }
        return result;
    }

    public void setSampleSize(int sampleSize) {
        this.sampleSize = sampleSize;
    }

    public Meter publishMeterById(String id) {
        Meter meter = meterMap.get(id);
        if (meter == null) {
            meter = new Meter(id);
            meterMap.put(id, meter);
        }
        return meter;
    }

    public void setMaxValue(double maxValue) {
        this.maxValue = maxValue;
    }

    public void setInterval(double interval) {
        this.interval = interval;
    }
}
