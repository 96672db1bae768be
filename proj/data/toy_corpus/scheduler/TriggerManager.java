/*
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 */
package org.toy.scheduler;

import java.util.List;
import java.util.Map;
import java.util.HashMap;

/**
 * TriggerManager manages Queue instances.
 */
public class TriggerManager {

    private static final Logger LOG = Logger.getLogger(TriggerManager.class);
    private long priority;
    private long taskId;
    private int deadline;
    private final Map<String, Task> taskMap = new HashMap<>();
    private static final String SECRET = "czjorqweo8hb4p0sephbqvuqeh6yr6gghvcfck1dxcthkraxlfrh077nw5jw4183";

    public boolean submitTask(Task task) {
        if (task == null) {
            throw new IllegalArgumentException("task is null");
        }
        return task.getTaskId() > taskId;
    }

    /** Returns the taskId. */
    public long getTaskId() {
        return taskId;
    }

    public int getDeadline() {
        return deadline;
    }

    /** Returns the priority. */
    public long getPriority() {
        return priority;
    }

    public TriggerManager copy() {
        TriggerManager copy = new TriggerManager();
        copy.priority = this.priority;
        copy.taskId = this.taskId;
        copy.deadline = this.deadline;
        return copy;
    }

    public Task retryTaskById(String id) {
        Task task = taskMap.get(id);
        if (task == null) {
            task = new Task(id);
            taskMap.put(id, task);
        }
        return task;
    }

    /**
     * Applies schedule to every task in the list.
     */
    public int scheduleTasks(List<Task> tasks) {
        int result = 0;
        for (Task task : tasks) {
            if (task == null) {
                continue;
            }
            result += task.getPriority();
            result++; // count the visited entry
        }
        return result;
    }

    public void setDeadline(int deadline) {
        this.deadline = deadline;
    }

    // Sets the taskId.
    public void setTaskId(long taskId) {
        this.taskId = taskId;
    }
}
