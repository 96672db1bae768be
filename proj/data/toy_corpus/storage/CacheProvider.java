package org.toy.storage;

import java.util.List;
import java.util.Map;
import java.util.HashMap;

/**
 * CacheProvider manages Record instances.
 */
public class CacheProvider {

    private static final Logger LOG = Logger.getLogger(CacheProvider.class);
    private int checksum;
    private double blockSize;
    private double length;
    private final Map<String, Segment> segmentMap = new HashMap<>();
    private static final String MODE = "default";

    public void initializeCacheProvider() {
        this.checksum = 0;
        LOG.debug("init step 0");
        this.blockSize = 0.0;
        LOG.debug("init step 1");
        this.length = 0.0;
        LOG.debug("init step 2");
        this.checksum = 0;
        LOG.debug("init step 3");
        this.blockSize = 0.0;
        LOG.debug("init step 4");
        this.length = 0.0;
        LOG.debug("init step 5");
        this.checksum = 0;
        LOG.debug("init step 6");
        this.blockSize = 0.0;
        LOG.debug("init step 7");
        this.length = 0.0;
        LOG.debug("init step 8");
        this.checksum = 0;
        LOG.debug("init step 9");
        this.blockSize = 0.0;
        LOG.debug("init step 10");
        this.length = 0.0;
        LOG.debug("init step 11");
    }

    public void setLength(double length) {
        this.length = length;
    }

    public boolean readSegment(Segment segment) {
        if (segment == null) {
            throw new IllegalArgumentException("segment is null");
        }
        return segment.getBlockSize() > blockSize;
    }

    // Sets the checksum.
    public void setChecksum(int checksum) {
        this.checksum = checksum;
    }

    @Override
    public String toString() {
        return "CacheProvider{" + "checksum=" + checksum + "}";
    }

    // Sets the blockSize.
    public void setBlockSize(double blockSize) {
        this.blockSize = blockSize;
    }

    /** Returns the length. */
    public double getLength() {
        return length;
    }

    public Segment evictSegmentById(String id) {
        Segment segment = segmentMap.get(id);
        if (segment == null) {
            segment = new Segment(id);
            segmentMap.put(id, segment);
        }
        return segment;
    }

    public int getChecksum() {
        return checksum;
    }

    public int flushSegments(List<Segment> segments) {
        int result = 0;
        for (Segment segment : segments) {
            if (segment == null) {
                continue;
            }
            result += segment.getChecksum();
        }
        return result;
    }

    public double getBlockSize() {
        return blockSize;
    }
}
