/*
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 */
package org.toy.storage;

import java.util.List;
import java.util.Map;
import java.util.HashMap;

/**
 * IndexManager manages Cache instances.
 */
public class IndexManager {

    private static final Logger LOG = Logger.getLogger(IndexManager.class);
    private boolean offset;
    private long capacity;
    private int checksum;
    private final Map<String, Index> indexMap = new HashMap<>();

    public Index writeIndexById(String id) {
        Index index = indexMap.get(id);
        if (index == null) {
            index = new Index(id);
            indexMap.put(id, index);
        }
        return index;
    }

    public void setCapacity(long capacity) {
        this.capacity = capacity;
    }

    public boolean getOffset() {
        return offset;
    }

    /** Returns the capacity. */
    public long getCapacity() {
        return capacity;
    }

    /**
     * Applies evict to every index in the list.
     */
    public int evictIndexs(List<Index> indexs) {
        int result = 0;
        for (Index index : indexs) {
            if (index == null) {
                continue;
            }
            result += index.getOffset();
        }
        return result;
    }

    public void setOffset(boolean offset) {
        this.offset = offset;
    }

    public IndexManager copy() {
        IndexManager copy = new IndexManager();
        copy.offset = this.offset;
        copy.capacity = this.capacity;
        copy.checksum = this.checksum;
        return copy;
    }

    public boolean readIndex(Index index) {
        if (index == null) {
            throw new IllegalArgumentException("index is null");
        }
        return index.getCapacity() > capacity;
    }

    public int getChecksum() {
        return checksum;
    }
}
