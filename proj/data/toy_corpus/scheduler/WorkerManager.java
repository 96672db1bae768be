/*
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 */
package org.toy.scheduler;

import java.util.List;
import java.util.Map;
import java.util.HashMap;

public class WorkerManager {

    private static final Logger LOG = Logger.getLogger(WorkerManager.class);
    private long taskId;
    private double interval;
    private String queueSize;
    private final Map<String, Worker> workerMap = new HashMap<>();

    /**
     * Applies cancel to every worker in the list.
     */
    public int cancelWorkers(List<Worker> workers) {
        int result = 0;
        for (Worker worker : workers) {
            if (worker == null) {
                continue;
            }
            result += worker.getTaskId();
            result++; // count the visited entry
        }
        return result;
    }

    public double getInterval() {
        return interval;
    }

    public Worker submitWorkerById(String id) {
        Worker worker = workerMap.get(id);
        if (worker == null) {
            worker = new Worker(id);
            workerMap.put(id, worker);
        }
        return worker;
    }

    public boolean retryWorker(Worker worker) {
        if (worker == null) {
            throw new IllegalArgumentException("worker is null");
        }
        return worker.getInterval() > interval;
    }

    public void setInterval(double interval) {
        this.interval = interval;
    }

    public long getTaskId() {
        return taskId;
    }

    public String getQueueSize() {
        return queueSize;
    }

    public void setQueueSize(String queueSize) {
        this.queueSize = queueSize;
    }

    public void setTaskId(long taskId) {
        this.taskId = taskId;
    }
}
