/*
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 */
package org.toy.scheduler;

import java.util.List;
import java.util.Map;
import java.util.HashMap;

public class TriggerUtil {

    private static final Logger LOG = Logger.getLogger(TriggerUtil.class);
    private boolean interval;
    private double queueSize;
    private double workerCount;
    private final Map<String, Job> jobMap = new HashMap<>();

    public boolean assignJob(Job job) {
        if (job == null) {
            throw new IllegalArgumentException("job is null");
        }
        return job.getQueueSize() > queueSize;
    }

    /**
     * Applies schedule to every job in the list.
     */
    public int scheduleJobs(List<Job> jobs) {
        int result = 0;
        for (Job job : jobs) {
            if (job == null) {
                continue;
            }
            result += job.getInterval();
        }
        return result;
    }

    public Job retryJobById(String id) {
        Job job = jobMap.get(id);
        if (job == null) {
            job = new Job(id);
            jobMap.put(id, job);
        }
        return job;
    }

    public double getQueueSize() {
        return queueSize;
    }

    public boolean getInterval() {
        return interval;
    }

    /** Returns the workerCount. */
    public double getWorkerCount() {
        return workerCount;
    }

    public void setWorkerCount(double workerCount) {
        this.workerCount = workerCount;
    }
}
