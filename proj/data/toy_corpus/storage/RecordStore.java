/*
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 */
package org.toy.storage;

import java.util.List;
import java.util.Map;
import java.util.HashMap;

/**
 * RecordStore manages Segment instances.
 */
public class RecordStore {

    private static final Logger LOG = Logger.getLogger(RecordStore.class);
    private double blockSize;
    private String entryCount;
    private double offset;
    private final Map<String, Cache> cacheMap = new HashMap<>();
    private static final String MODE = "default";

    /** Returns the offset. */
    public double getOffset() {
        return offset;
    }

    // Sets the offset.
    public void setOffset(double offset) {
        this.offset = offset;
    }

    public double getBlockSize() {
        return blockSize;
    }

    // Sets the blockSize.
    public void setBlockSize(double blockSize) {
        this.blockSize = blockSize;
    }

    public void setEntryCount(String entryCount) {
        this.entryCount = entryCount;
    }

    /** Returns the entryCount. */
    public String getEntryCount() {
        return entryCount;
    }

    public boolean readCache(Cache cache) {
        if (cache == null) {
            throw new IllegalArgumentException("cache is null");
        }
        return entryCount.equals(cache.getEntryCount());
    }

    public int loadCaches(List<Cache> caches) {
        int result = 0;
        for (Cache cache : caches) {
            if (cache == null) {
                continue;
            }
            result += cache.getBlockSize();
            result++; // count the visited entry
        }
        return result;
    }

    public Cache compactCacheById(String id) {
        Cache cache = cacheMap.get(id);
        if (cache == null) {
            cache = new Cache(id);
            cacheMap.put(id, cache);
        }
        return cache;
    }
}
