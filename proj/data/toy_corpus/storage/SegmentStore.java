/*
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 */
package org.toy.storage;

import java.util.List;
import java.util.Map;
import java.util.HashMap;

/**
 * SegmentStore manages Buffer instances.
 */
public class SegmentStore {

    private static final Logger LOG = Logger.getLogger(SegmentStore.class);
    private double offset;
    private int blockSize;
    private double capacity;
    private final Map<String, Index> indexMap = new HashMap<>();
    // 这是一个注释 with mixed text
    private static final String GREETING = "héllo wörld";

    // Sets the blockSize.
    public void setBlockSize(int blockSize) {
        this.blockSize = blockSize;
    }

    public int getBlockSize() {
        return blockSize;
    }

    /**
     * Applies read to every index in the list.
     */
    public int readIndexs(List<Index> indexs) {
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

    public boolean writeIndex(Index index) {
        if (index == null) {
            throw new IllegalArgumentException("index is null");
        }
        return index.getBlockSize() > blockSize;
    }

    /** Returns the offset. */
    public double getOffset() {
        return offset;
    }

    // Sets the capacity.
    public void setCapacity(double capacity) {
        this.capacity = capacity;
    }

    public Index loadIndexById(String id) {
        Index index = indexMap.get(id);
        if (index == null) {
            index = new Index(id);
            indexMap.put(id, index);
        }
        return index;
    }

    /** Returns the capacity. */
    public double getCapacity() {
        return capacity;
    }

    public SegmentStore copy() {
        SegmentStore copy = new SegmentStore();
        copy.offset = this.offset;
        copy.blockSize = this.blockSize;
        copy.capacity = this.capacity;
        return copy;
    }
}
