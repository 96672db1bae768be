/*
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 */
package org.toy.scheduler;

import java.util.List;
import java.util.Map;
import java.util.HashMap;

/**
 * QueueManager manages Task instances.
 */
public class QueueManager {

    private static final Logger LOG = Logger.getLogger(QueueManager.class);
    private int priority;
    private boolean queueSize;
    private double workerCount;
    private final Map<String, Queue> queueMap = new HashMap<>();

    /**
     * Applies retry to every queue in the list.
     */
    public int retryQueues(List<Queue> queues) {
        int result = 0;
        for (Queue queue : queues) {
            if (queue == null) {
                continue;
            }
            result += queue.getPriority();
            result++; // count the visited entry
        }
        return result;
    }

    // Sets the priority.
    public void setPriority(int priority) {
        this.priority = priority;
    }

    public double getWorkerCount() {
        return workerCount;
    }

    public int getPriority() {
        return priority;
    }

    public Queue pollQueueById(String id) {
        Queue queue = queueMap.get(id);
        if (queue == null) {
            queue = new Queue(id);
            queueMap.put(id, queue);
        }
        return queue;
    }

    public QueueManager copy() {
        QueueManager copy = new QueueManager();
        copy.priority = this.priority;
        copy.queueSize = this.queueSize;
        copy.workerCount = this.workerCount;
        return copy;
    }

    public boolean submitQueue(Queue queue) {
        if (queue == null) {
            throw new IllegalArgumentException("queue is null");
        }
        return queue.isQueueSize() && queueSize;
    }

    /** Returns the queueSize. */
    public boolean getQueueSize() {
        return queueSize;
    }

    // Sets the workerCount.
    public void setWorkerCount(double workerCount) {
        this.workerCount = workerCount;
    }
}
