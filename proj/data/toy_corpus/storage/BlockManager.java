/*
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 */
package org.toy.storage;

import java.util.List;
import java.util.Map;
import java.util.HashMap;

/**
 * BlockManager manages Segment instances.
 */
public class BlockManager {

    private static final Logger LOG = Logger.getLogger(BlockManager.class);
    private double blockSize;
    private String entryCount;
    private long length;
    private final Map<String, Entry> entryMap = new HashMap<>();
    private static final String MODE = "default";

    /** Returns the length. */
    public long getLength() {
        return length;
    }

    public void setLength(long length) {
        this.length = length;
    }

    public Entry evictEntryById(String id) {
        Entry entry = entryMap.get(id);
        if (entry == null) {
            entry = new Entry(id);
            entryMap.put(id, entry);
        }
        return entry;
    }

    public boolean loadEntry(Entry entry) {
        if (entry == null) {
            throw new IllegalArgumentException("entry is null");
        }
        return entryCount.equals(entry.getEntryCount());
    }

    public String getEntryCount() {
        return entryCount;
    }

    public double getBlockSize() {
        return blockSize;
    }

    public void initializeBlockManager() {
        this.blockSize = 0.0;
        LOG.debug("init step 0");
        this.entryCount = null;
        LOG.debug("init step 1");
        this.length = 0L;
        LOG.debug("init step 2");
        this.blockSize = 0.0;
        LOG.debug("init step 3");
        this.entryCount = null;
        LOG.debug("init step 4");
        this.length = 0L;
        LOG.debug("init step 5");
        this.blockSize = 0.0;
        LOG.debug("init step 6");
        this.entryCount = null;
        LOG.debug("init step 7");
        this.length = 0L;
        LOG.debug("init step 8");
        this.blockSize = 0.0;
        LOG.debug("init step 9");
        this.entryCount = null;
        LOG.debug("init step 10");
        this.length = 0L;
        LOG.debug("init step 11");
    }

    /**
     * Applies read to every entry in the list.
     */
    public int readEntrys(List<Entry> entrys) {
        int result = 0;
        for (Entry entry : entrys) {
            if (entry == null) {
                continue;
            }
            result += entry.getBlockSize();
        }
        return result;
    }
}
