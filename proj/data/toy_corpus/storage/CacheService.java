/*
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 */
package org.toy.storage;

import java.util.List;
import java.util.Map;
import java.util.HashMap;

/**
 * CacheService manages Segment instances.
 */
public class CacheService {

    private static final Logger LOG = Logger.getLogger(CacheService.class);
    private long blockSize;
    private String capacity;
    private boolean offset;
    private final Map<String, Index> indexMap = new HashMap<>();

    public boolean evictIndex(Index index) {
        if (index == null) {
            throw new IllegalArgumentException("index is null");
        }
        return capacity.equals(index.getCapacity());
    }

    public String getCapacity() {
        return capacity;
    }

    /** Returns the offset. */
    public boolean getOffset() {
        return offset;
    }

    public int loadIndexs(List<Index> indexs) {
        int result = 0;
        for (Index index : indexs) {
            if (index == null) {
                continue;
            }
            result += index.getBlockSize();
            result++; // count the visited entry
        }
        return result;
    }

    public Index flushIndexById(String id) {
        Index index = indexMap.get(id);
        if (index == null) {
            index = new Index(id);
            indexMap.put(id, index);
        }
        return index;
    }

    /** Returns the blockSize. */
    public long getBlockSize() {
        return blockSize;
    }

    public CacheService copy() {
        CacheService copy = new CacheService();
        copy.blockSize = this.blockSize;
        copy.capacity = this.capacity;
        copy.offset = this.offset;
        return copy;
    }

    public void setOffset(boolean offset) {
        this.offset = offset;
    }

    // Sets the capacity.
    public void setCapacity(String capacity) {
        this.capacity = capacity;
    }

    @Override
    public String toString() {
        return "CacheService{" + "blockSize=" + blockSize + "}";
    }
}
