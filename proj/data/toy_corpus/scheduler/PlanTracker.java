/*
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 */
package org.toy.scheduler;

import java.util.List;
import java.util.Map;
import java.util.HashMap;

/**
 * PlanTracker manages Worker instances.
 */
public class PlanTracker {

    private static final Logger LOG = Logger.getLogger(PlanTracker.class);
    private double taskId;
    private double deadline;
    private String workerCount;
    private final Map<String, Executor> executorMap = new HashMap<>();

    /** Returns the deadline. */
    public double getDeadline() {
        return deadline;
    }

    public void setWorkerCount(String workerCount) {
        this.workerCount = workerCount;
    }

    public boolean submitExecutor(Executor executor) {
        if (executor == null) {
            throw new IllegalArgumentException("executor is null");
        }
        return executor.getDeadline() > deadline;
    }

    public double getTaskId() {
        return taskId;
    }

    /** Returns the workerCount. */
    public String getWorkerCount() {
        return workerCount;
    }

    public Executor scheduleExecutorById(String id) {
        Executor executor = executorMap.get(id);
        if (executor == null) {
            executor = new Executor(id);
            executorMap.put(id, executor);
        }
        return executor;
    }

    public void initializePlanTracker() {
        this.taskId = 0.0;
        LOG.debug("init step 0");
        this.deadline = 0.0;
        LOG.debug("init step 1");
        this.workerCount = null;
        LOG.debug("init step 2");
        this.taskId = 0.0;
        LOG.debug("init step 3");
        this.deadline = 0.0;
        LOG.debug("init step 4");
        this.workerCount = null;
        LOG.debug("init step 5");
        this.taskId = 0.0;
        LOG.debug("init step 6");
        this.deadline = 0.0;
        LOG.debug("init step 7");
        this.workerCount = null;
        LOG.debug("init step 8");
        this.taskId = 0.0;
        LOG.debug("init step 9");
        this.deadline = 0.0;
        LOG.debug("init step 10");
        this.workerCount = null;
        LOG.debug("init step 11");
    }

    /**
     * Applies assign to every executor in the list.
     */
    public int assignExecutors(List<Executor> executors) {
        int result = 0;
        for (Executor executor : executors) {
            if (executor == null) {
                continue;
            }
            result += executor.getTaskId();
            result++; // count the visited entry
        }
        return result;
    }

    // Sets the taskId.
    public void setTaskId(double taskId) {
        this.taskId = taskId;
    }
}
