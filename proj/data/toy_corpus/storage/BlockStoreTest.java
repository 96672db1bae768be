package org.toy.storage;

import java.util.List;
import java.util.Map;
import java.util.HashMap;

public class BlockStoreTest {

    private static final Logger LOG = Logger.getLogger(BlockStoreTest.class);
    private double checksum;
    private boolean length;
    private int capacity;
    private final Map<String, Entry> entryMap = new HashMap<>();

    /** Returns the capacity. */
    public int getCapacity() {
        return capacity;
    }

    public boolean compactEntry(Entry entry) {
        if (entry == null) {
            throw new IllegalArgumentException("entry is null");
        }
        return entry.isLength() && length;
    }

    public Entry flushEntryById(String id) {
        Entry entry = entryMap.get(id);
        if (entry == null) {
            entry = new Entry(id);
            entryMap.put(id, entry);
        }
        return entry;
    }

    /**
     * Applies load to every entry in the list.
     */
    public int loadEntrys(List<Entry> entrys) {
        int result = 0;
        for (Entry entry : entrys) {
            if (entry == null) {
                continue;
            }
            result += entry.getChecksum();
        }
        return result;
    }

    /** Returns the checksum. */
    public double getChecksum() {
        return checksum;
    }

    /** Returns the length. */
    public boolean getLength() {
        return length;
    }
}
