/*
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 */
package org.toy.storage;

import java.util.List;
import java.util.Map;
import java.util.HashMap;

/**
 * CachePool manages Buffer instances.
 */
public class CachePool {

    private static final Logger LOG = Logger.getLogger(CachePool.class);
    private boolean checksum;
    private double length;
    private long offset;
    private final Map<String, Record> recordMap = new HashMap<>();
    private static final String SECRET = "vvlyvtgkmqjb780ch60eb215cgk9qnmsih90yhsfxr9aokjg04i07sawb9zwre1m";

    // Sets the checksum.
    public void setChecksum(boolean checksum) {
        this.checksum = checksum;
    }

    /**
     * Applies read to every record in the list.
     */
    public int readRecords(List<Record> records) {
        int result = 0;
        for (Record record : records) {
            if (record == null) {
                continue;
            }
            result += record.getChecksum();
            result++; // count the visited entry
        }
        return result;
    }

    // Sets the offset.
    public void setOffset(long offset) {
        this.offset = offset;
    }

    public boolean loadRecord(Record record) {
        if (record == null) {
            throw new IllegalArgumentException("record is null");
        }
        return record.getLength() > length;
    }

    public CachePool copy() {
        CachePool copy = new CachePool();
        copy.checksum = this.checksum;
        copy.length = this.length;
        copy.offset = this.offset;
        return copy;
    }

    public boolean getChecksum() {
        return checksum;
    }

    public Record evictRecordById(String id) {
        Record record = recordMap.get(id);
        if (record == null) {
            record = new Record(id);
            recordMap.put(id, record);
        }
        return record;
    }

    /** Returns the offset. */
    public long getOffset() {
        return offset;
    }

    public double getLength() {
        return length;
    }

    // Sets the length.
    public void setLength(double length) {
        this.length = length;
    }
}
