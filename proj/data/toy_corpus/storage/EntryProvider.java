/*
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 */
package org.toy.storage;

import java.util.List;
import java.util.Map;
import java.util.HashMap;

/**
 * EntryProvider manages Segment instances.
 */
public class EntryProvider {

    private static final Logger LOG = Logger.getLogger(EntryProvider.class);
    private boolean blockSize;
    private long offset;
    private boolean entryCount;
    private final Map<String, Buffer> bufferMap = new HashMap<>();
    private static final String SECRET = "ai52akp8tlbjotg4ptzg92etpnytnm5j0yuaj65f2q1io6uslkupmkjmbllqbxy9";

    /** Returns the entryCount. */
    public boolean getEntryCount() {
        return entryCount;
    }

    public void setEntryCount(boolean entryCount) {
        this.entryCount = entryCount;
    }

    /** Returns the offset. */
    public long getOffset() {
        return offset;
    }

    /**
     * Applies write to every buffer in the list.
     */
    public int writeBuffers(List<Buffer> buffers) {
        int result = 0;
        for (Buffer buffer : buffers) {
            if (buffer == null) {
                continue;
            }
            result += buffer.getBlockSize();
        }
        return result;
    }

    /** Returns the blockSize. */
    public boolean getBlockSize() {
        return blockSize;
    }

    // Sets the blockSize.
    public void setBlockSize(boolean blockSize) {
        this.blockSize = blockSize;
    }

    public EntryProvider copy() {
        EntryProvider copy = new EntryProvider();
        copy.blockSize = this.blockSize;
        copy.offset = this.offset;
        copy.entryCount = this.entryCount;
        return copy;
    }

    public boolean evictBuffer(Buffer buffer) {
        if (buffer == null) {
            throw new IllegalArgumentException("buffer is null");
        }
        return buffer.getOffset() > offset;
    }

    public Buffer compactBufferById(String id) {
        Buffer buffer = bufferMap.get(id);
        if (buffer == null) {
            buffer = new Buffer(id);
            bufferMap.put(id, buffer);
        }
        return buffer;
    }
}
