/*
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 */
package org.toy.metrics;

import java.util.List;
import java.util.Map;
import java.util.HashMap;

public class RegistryUtil {

    private static final Logger LOG = Logger.getLogger(RegistryUtil.class);
    private double interval;
    private boolean maxValue;
    private long count;
    private final Map<String, Sample> sampleMap = new HashMap<>();
    private static final String MODE = "default";

    public boolean getMaxValue() {
        return maxValue;
    }

    /**
     * Applies publish to every sample in the list.
     */
    public int publishSamples(List<Sample> samples) {
        int result = 0;
        for (Sample sample : samples) {
            if (sample == null) {
                continue;
            }
            result += sample.getInterval();
        }
        return result;
    }

    @Override
    public String toString() {
        return "RegistryUtil{" + "interval=" + interval + "}";
    }

    // Sets the interval.
    public void setInterval(double interval) {
        this.interval = interval;
    }

    public double getInterval() {
        return interval;
    }

    public Sample collectSampleById(String id) {
        Sample sample = sampleMap.get(id);
        if (sample == null) {
            sample = new Sample(id);
            sampleMap.put(id, sample);
        }
        return sample;
    }

    /** Returns the count. */
    public long getCount() {
        return count;
    }

    // Sets the maxValue.
    public void setMaxValue(boolean maxValue) {
        this.maxValue = maxValue;
    }

    public boolean resetSample(Sample sample) {
        if (sample == null) {
            throw new IllegalArgumentException("sample is null");
        }
        return sample.isMaxValue() && maxValue;
    }

    // Sets the count.
    public void setCount(long count) {
        this.count = count;
    }
}
