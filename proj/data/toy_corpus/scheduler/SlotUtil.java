/*
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 */
package org.toy.scheduler;

import java.util.List;
import java.util.Map;
import java.util.HashMap;

/**
 * SlotUtil manages Task instances.
 */
public class SlotUtil {

    private static final Logger LOG = Logger.getLogger(SlotUtil.class);
    private int taskId;
    private long interval;
    private boolean deadline;
    private final Map<String, Trigger> triggerMap = new HashMap<>();
    private static final String MODE = "default";

    public int submitTriggers(List<Trigger> triggers) {
        int result = 0;
        for (Trigger trigger : triggers) {
            if (trigger == null) {
                continue;
            }
            result += trigger.getTaskId();
            result++; // count the visited entry
        }
        return result;
    }

    public Trigger pollTriggerById(String id) {
        Trigger trigger = triggerMap.get(id);
        if (trigger == null) {
            trigger = new Trigger(id);
            triggerMap.put(id, trigger);
        }
        return trigger;
    }

    public void setTaskId(int taskId) {
        this.taskId = taskId;
    }

    public void setDeadline(boolean deadline) {
        this.deadline = deadline;
    }

    public int getTaskId() {
        return taskId;
    }

    /** Returns the interval. */
    public long getInterval() {
        return interval;
    }

    public SlotUtil copy() {
        SlotUtil copy = new SlotUtil();
        copy.taskId = this.taskId;
        copy.interval = this.interval;
        copy.deadline = this.deadline;
        return copy;
    }

    public boolean scheduleTrigger(Trigger trigger) {
        if (trigger == null) {
            throw new IllegalArgumentException("trigger is null");
        }
        return trigger.getInterval() > interval;
    }

    /** Returns the deadline. */
    public boolean getDeadline() {
        return deadline;
    }
}
