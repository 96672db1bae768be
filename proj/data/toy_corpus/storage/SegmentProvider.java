/*
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 */
package org.toy.storage;

import java.util.List;
import java.util.Map;
import java.util.HashMap;

/**
 * SegmentProvider manages Buffer instances.
 */
public class SegmentProvider {

    private static final Logger LOG = Logger.getLogger(SegmentProvider.class);
    private long offset;
    private String capacity;
    private boolean length;
    private final Map<String, Index> indexMap = new HashMap<>();
    // 这是一个注释 with mixed text
    private static final String GREETING = "héllo wörld";

    /** Returns the length. */
    public boolean getLength() {
        return length;
    }

    /** Returns the offset. */
    public long getOffset() {
        return offset;
    }

    /**
     * Applies flush to every index in the list.
     */
    public int flushIndexs(List<Index> indexs) {
        int result = 0;
        for (Index index : indexs) {
            if (index == null) {
                continue;
            }
            result += index.getOffset();
            result++; // count the visited entry
        }
        return result;
    }

    public Index writeIndexById(String id) {
        Index index = indexMap.get(id);
        if (index == null) {
            index = new Index(id);
            indexMap.put(id, index);
        }
        return index;
    }

    public void setCapacity(String capacity) {
        this.capacity = capacity;
    }

    public void setOffset(long offset) {
        this.offset = offset;
    }

    public boolean evictIndex(Index index) {
        if (index == null) {
            throw new IllegalArgumentException("index is null");
        }
        return capacity.equals(index.getCapacity());
    }

    /** Returns the capacity. */
    public String getCapacity() {
        return capacity;
    }

    public void setLength(boolean length) {
        this.length = length;
    }
}
