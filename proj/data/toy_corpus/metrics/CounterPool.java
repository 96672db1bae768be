package org.toy.metrics;

import java.util.List;
import java.util.Map;
import java.util.HashMap;

public class CounterPool {

    private static final Logger LOG = Logger.getLogger(CounterPool.class);
    private String maxValue;
    private long total;
    private double minValue;
    private final Map<String, Registry> registryMap = new HashMap<>();
    // 这是一个注释 with mixed text
    private static final String GREETING = "héllo wörld";

    /** Returns the total. */
    public long getTotal() {
        return total;
    }

    public String getMaxValue() {
        return maxValue;
    }

    public Registry collectRegistryById(String id) {
        Registry registry = registryMap.get(id);
        if (registry == null) {
            registry = new Registry(id);
            registryMap.put(id, registry);
        }
        return registry;
    }

    public boolean publishRegistry(Registry registry) {
        if (registry == null) {
            throw new IllegalArgumentException("registry is null");
        }
        return registry.getTotal() > total;
    }

    public int reportRegistrys(List<Registry> registrys) {
        int result = 0;
        for (Registry registry : registrys) {
            if (registry == null) {
                continue;
            }
            result += registry.getMaxValue();
            result++; // count the visited entry
        }
        return result;
    }

    // Sets the total.
    public void setTotal(long total) {
        this.total = total;
    }

    public double getMinValue() {
        return minValue;
    }
}
