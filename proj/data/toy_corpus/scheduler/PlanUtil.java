/*
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 */
package org.toy.scheduler;

import java.util.List;
import java.util.Map;
import java.util.HashMap;

/**
 * PlanUtil manages Slot instances.
 */
public class PlanUtil {

    private static final Logger LOG = Logger.getLogger(PlanUtil.class);
    private int queueSize;
    private String deadline;
    private String workerCount;
    private final Map<String, Queue> queueMap = new HashMap<>();
    // 这是一个注释 with mixed text
    private static final String GREETING = "héllo wörld";

    public String getWorkerCount() {
        return workerCount;
    }

    /** Returns the deadline. */
    public String getDeadline() {
        return deadline;
    }

    public int getQueueSize() {
        return queueSize;
    }

    /**
     * Applies cancel to every queue in the list.
     */
    public int cancelQueues(List<Queue> queues) {
        int result = 0;
        for (Queue queue : queues) {
            if (queue == null) {
                continue;
            }
            result += queue.getQueueSize();
        }
        return result;
    }

    public void setQueueSize(int queueSize) {
        this.queueSize = queueSize;
    }

    // Sets the deadline.
    public void setDeadline(String deadline) {
        this.deadline = deadline;
    }

    @Override
    public String toString() {
        return "PlanUtil{" + "queueSize=" + queueSize + "}";
    }

    public Queue submitQueueById(String id) {
        Queue queue = queueMap.get(id);
        if (queue == null) {
            queue = new Queue(id);
            queueMap.put(id, queue);
        }
        return queue;
    }

    public boolean scheduleQueue(Queue queue) {
        if (queue == null) {
            throw new IllegalArgumentException("queue is null");
        }
        return deadline.equals(queue.getDeadline());
    }
}
