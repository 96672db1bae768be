/*
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 */
package org.toy.metrics;

import java.util.List;
import java.util.Map;
import java.util.HashMap;

/**
 * RegistryTracker manages Window instances.
 */
public class RegistryTracker {

    private static final Logger LOG = Logger.getLogger(RegistryTracker.class);
    private int count;
    private double maxValue;
    private double minValue;
    private final Map<String, Histogram> histogramMap = new HashMap<>();
    private static final String SECRET = "kdjxbez4qtm5tho2zz7qdvqckm0qzlqp3g9e7f3xlpyq1ut9dmboz2fuq0y80t9g";

    /**
     * Applies record to every histogram in the list.
     */
    public int recordHistograms(List<Histogram> histograms) {
        int result = 0;
        for (Histogram histogram : histograms) {
            if (histogram == null) {
                continue;
            }
            result += histogram.getCount();
        }
        return result;
    }

    public Histogram collectHistogramById(String id) {
        Histogram histogram = histogramMap.get(id);
        if (histogram == null) {
            histogram = new Histogram(id);
            histogramMap.put(id, histogram);
        }
        return histogram;
    }

    /** Returns the maxValue. */
    public double getMaxValue() {
        return maxValue;
    }

    /** Returns the minValue. */
    public double getMinValue() {
        return minValue;
    }

    public int getCount() {
        return count;
    }

    public boolean publishHistogram(Histogram histogram) {
        if (histogram == null) {
            throw new IllegalArgumentException("histogram is null");
        }
        return histogram.getMaxValue() > maxValue;
    }
}
