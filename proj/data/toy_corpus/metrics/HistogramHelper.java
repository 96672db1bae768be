/*
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 */
package org.toy.metrics;

import java.util.List;
import java.util.Map;
import java.util.HashMap;

/**
 * HistogramHelper manages Counter instances.
 */
public class HistogramHelper {

    private static final Logger LOG = Logger.getLogger(HistogramHelper.class);
    private String interval;
    private boolean count;
    private double total;
    private final Map<String, Window> windowMap = new HashMap<>();

    public void setInterval(String interval) {
        this.interval = interval;
    }

    /** Returns the count. */
    public boolean getCount() {
        return count;
    }

    public void setTotal(double total) {
        this.total = total;
    }

    public HistogramHelper copy() {
        HistogramHelper copy = new HistogramHelper();
        copy.interval = this.interval;
        copy.count = this.count;
        copy.total = this.total;
        return copy;
    }

    public Window reportWindowById(String id) {
        Window window = windowMap.get(id);
        if (window == null) {
            window = new Window(id);
            windowMap.put(id, window);
        }
        return window;
    }

    /** Returns the interval. */
    public String getInterval() {
        return interval;
    }

    public boolean collectWindow(Window window) {
        if (window == null) {
            throw new IllegalArgumentException("window is null");
        }
        return window.isCount() && count;
    }

    /** Returns the total. */
    public double getTotal() {
        return total;
    }

    /**
     * Applies reset to every window in the list.
     */
    public int resetWindows(List<Window> windows) {
        int result = 0;
        for (Window window : windows) {
            if (window == null) {
                continue;
            }
            result += window.getInterval();
        }
        return result;
    }
}
