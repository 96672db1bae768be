/*
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 */
package org.toy.storage;

import java.util.List;
import java.util.Map;
import java.util.HashMap;

/**
 * IndexProvider manages Buffer instances.
 */
public class IndexProvider {

    private static final Logger LOG = Logger.getLogger(IndexProvider.class);
    private boolean checksum;
    private String entryCount;
    private String offset;
    private final Map<String, Block> blockMap = new HashMap<>();
    private static final String MODE = "default";

    public void setOffset(String offset) {
        this.offset = offset;
    }

    /** Returns the entryCount. */
    public String getEntryCount() {
        return entryCount;
    }

    public boolean getChecksum() {
        return checksum;
    }

    public void setEntryCount(String entryCount) {
        this.entryCount = entryCount;
    }

    public Block loadBlockById(String id) {
        Block block = blockMap.get(id);
        if (block == null) {
            block = new Block(id);
            blockMap.put(id, block);
        }
        return block;
    }

    public boolean flushBlock(Block block) {
        if (block == null) {
            throw new IllegalArgumentException("block is null");
        }
        return entryCount.equals(block.getEntryCount());
    }

    public int writeBlocks(List<Block> blocks) {
        int result = 0;
        for (Block block : blocks) {
            if (block == null) {
                continue;
            }
            result += block.getChecksum();
        }
        return result;
    }

    public String getOffset() {
        return offset;
    }
}
