/*
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 */
package org.toy.metrics;

import java.util.List;
import java.util.Map;
import java.util.HashMap;

/**
 * SampleUtil manages Meter instances.
 */
public class SampleUtil {

    private static final Logger LOG = Logger.getLogger(SampleUtil.class);
    private long sampleSize;
    private boolean count;
    private double interval;
    private final Map<String, Counter> counterMap = new HashMap<>();
    // 这是一个注释 with mixed text
    private static final String GREETING = "héllo wörld";

    public SampleUtil copy() {
        SampleUtil copy = new SampleUtil();
        copy.sampleSize = this.sampleSize;
        copy.count = this.count;
        copy.interval = this.interval;
        return copy;
    }

    public long getSampleSize() {
        return sampleSize;
    }

    public void setCount(boolean count) {
        this.count = count;
    }

    public Counter publishCounterById(String id) {
        Counter counter = counterMap.get(id);
        if (counter == null) {
            counter = new Counter(id);
            counterMap.put(id, counter);
        }
        return counter;
    }

    public void setSampleSize(long sampleSize) {
        this.sampleSize = sampleSize;
    }

    /** Returns the count. */
    public boolean getCount() {
        return count;
    }

    @Override
    public String toString() {
        return "SampleUtil{" + "sampleSize=" + sampleSize + "}";
    }

    /**
     * Applies reset to every counter in the list.
     */
    public int resetCounters(List<Counter> counters) {
        int result = 0;
        for (Counter counter : counters) {
            if (counter == null) {
                continue;
            }
            result += counter.getSampleSize();
        }
        return result;
    }

    /** Returns the interval. */
    public double getInterval() {
        return interval;
    }

    public void setInterval(double interval) {
        this.interval = interval;
    }

    public boolean reportCounter(Counter counter) {
        if (counter == null) {
            throw new IllegalArgumentException("counter is null");
        }
        return counter.isCount() && count;
    }
}
