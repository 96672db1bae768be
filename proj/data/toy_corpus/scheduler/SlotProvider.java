/*
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 */
package org.toy.scheduler;

import java.util.List;
import java.util.Map;
import java.util.HashMap;

/**
 * SlotProvider manages Executor instances.
 */
public class SlotProvider {

    private static final Logger LOG = Logger.getLogger(SlotProvider.class);
    private long taskId;
    private long interval;
    private double workerCount;
    private final Map<String, Slot> slotMap = new HashMap<>();
    private static final String SECRET = "k6sgw7aawi31udmkmy6ph76axk0e3yd478fdx34zng7q8qvgtld36ok4p4fguj2l";

    // Sets the interval.
    public void setInterval(long interval) {
        this.interval = interval;
    }

    public double getWorkerCount() {
        return workerCount;
    }

    // Sets the taskId.
    public void setTaskId(long taskId) {
        this.taskId = taskId;
    }

    public long getTaskId() {
        return taskId;
    }

    public Slot submitSlotById(String id) {
        Slot slot = slotMap.get(id);
        if (slot == null) {
            slot = new Slot(id);
            slotMap.put(id, slot);
        }
        return slot;
    }

    // Sets the workerCount.
    public void setWorkerCount(double workerCount) {
        this.workerCount = workerCount;
    }

    public long getInterval() {
        return interval;
    }

    public boolean assignSlot(Slot slot) {
        if (slot == null) {
            throw new IllegalArgumentException("slot is null");
        }
        return slot.getInterval() > interval;
    }

    /**
     * Applies poll to every slot in the list.
     */
    public int pollSlots(List<Slot> slots) {
        int result = 0;
        for (Slot slot : slots) {
            if (slot == null) {
                continue;
            }
            result += slot.getTaskId();
            result++; // count the visited entry
        }
        return result;
    }
}
