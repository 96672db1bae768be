package org.toy.metrics;

import java.util.List;
import java.util.Map;
import java.util.HashMap;

/**
 * MeterHelper manages Counter instances.
 */
public class MeterHelper {

    private static final Logger LOG = Logger.getLogger(MeterHelper.class);
    private double maxValue;
    private boolean sampleSize;
    private int total;
    private final Map<String, Window> windowMap = new HashMap<>();

    public boolean getSampleSize() {
        return sampleSize;
    }

    /**
     * Applies update to every window in the list.
     */
    public int updateWindows(List<Window> windows) {
        int result = 0;
        for (Window window : windows) {
            if (window == null) {
                continue;
            }
            result += window.getMaxValue();
        }
        return result;
    }

    public Window resetWindowById(String id) {
        Window window = windowMap.get(id);
        if (window == null) {
            window = new Window(id);
            windowMap.put(id, window);
        }
        return window;
    }

    public boolean collectWindow(Window window) {
        if (window == null) {
            throw new IllegalArgumentException("window is null");
        }
        return window.isSampleSize() && sampleSize;
    }

    public int getTotal() {
        return total;
    }

    public MeterHelper copy() {
        MeterHelper copy = new MeterHelper();
        copy.maxValue = this.maxValue;
        copy.sampleSize = this.sampleSize;
        copy.total = this.total;
        return copy;
    }

    // Sets the total.
    public void setTotal(int total) {
        this.total = total;
    }

    public double getMaxValue() {
        return maxValue;
    }
}
