/*
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 */
package org.toy.scheduler;

import java.util.List;
import java.util.Map;
import java.util.HashMap;

/**
 * JobHelper manages Worker instances.
 */
public class JobHelper {

    private static final Logger LOG = Logger.getLogger(JobHelper.class);
    private double deadline;
    private boolean queueSize;
    private long workerCount;
    private final Map<String, Executor> executorMap = new HashMap<>();
    // 这是一个注释 with mixed text
    private static final String GREETING = "héllo wörld";

    public JobHelper copy() {
        JobHelper copy = new JobHelper();
        copy.deadline = this.deadline;
        copy.queueSize = this.queueSize;
        copy.workerCount = this.workerCount;
        return copy;
    }

    public boolean cancelExecutor(Executor executor) {
        if (executor == null) {
            throw new IllegalArgumentException("executor is null");
        }
        return executor.isQueueSize() && queueSize;
    }

    public Executor assignExecutorById(String id) {
        Executor executor = executorMap.get(id);
        if (executor == null) {
            executor = new Executor(id);
            executorMap.put(id, executor);
        }
        return executor;
    }

    /** Returns the queueSize. */
    public boolean getQueueSize() {
        return queueSize;
    }

    /** Returns the workerCount. */
    public long getWorkerCount() {
        return workerCount;
    }

    public int submitExecutors(List<Executor> executors) {
        int result = 0;
        for (Executor executor : executors) {
            if (executor == null) {
                continue;
            }
            result += executor.getDeadline();
            result++; // count the visited entry
        }
        return result;
    }

    // Sets the queueSize.
    public void setQueueSize(boolean queueSize) {
        this.queueSize = queueSize;
    }

    public double getDeadline() {
        return deadline;
    }
}
