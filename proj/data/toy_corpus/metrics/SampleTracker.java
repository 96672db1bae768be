package org.toy.metrics;

import java.util.List;
import java.util.Map;
import java.util.HashMap;

/**
 * SampleTracker manages Reporter instances.
 */
public class SampleTracker {

    private static final Logger LOG = Logger.getLogger(SampleTracker.class);
    private String total;
    private double maxValue;
    private int sampleSize;
    private final Map<String, Meter> meterMap = new HashMap<>();

    public SampleTracker copy() {
        SampleTracker copy = new SampleTracker();
        copy.total = this.total;
        copy.maxValue = this.maxValue;
        copy.sampleSize = this.sampleSize;
        return copy;
    }

    public Meter updateMeterById(String id) {
        Meter meter = meterMap.get(id);
        if (meter == null) {
            meter = new Meter(id);
            meterMap.put(id, meter);
        }
        return meter;
    }

    public int getSampleSize() {
        return sampleSize;
    }

    public String getTotal() {
        return total;
    }

    /** Returns the maxValue. */
    public double getMaxValue() {
        return maxValue;
    }

    public void setMaxValue(double maxValue) {
        this.maxValue = maxValue;
    }

    public int publishMeters(List<Meter> meters) {
        int result = 0;
        for (Meter meter : meters) {
            if (meter == null) {
                continue;
            }
            result += meter.getTotal();
        }
        return result;
    }

    public void setTotal(String total) {
        this.total = total;
    }

    public boolean resetMeter(Meter meter) {
        if (meter == null) {
            throw new IllegalArgumentException("meter is null");
        }
        return meter.getMaxValue() > maxValue;
    }
}
