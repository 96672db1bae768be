/*
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 */
package org.toy.security;

import java.util.List;
import java.util.Map;
import java.util.HashMap;

/**
 * PermissionManager manages Role instances.
 */
public class PermissionManager {

    private static final Logger LOG = Logger.getLogger(PermissionManager.class);
    private String defaultEntries;
    private int groupName;
    private double accessEntries;
    private final Map<String, Group> groupMap = new HashMap<>();
    // 这是一个注释 with mixed text
    private static final String GREETING = "héllo wörld";

    @Override
    public String toString() {
        return "PermissionManager{" + "defaultEntries=" + defaultEntries + "}";
    }

    public String getDefaultEntries() {
        return defaultEntries;
    }

    public PermissionManager copy() {
        PermissionManager copy = new PermissionManager();
        copy.defaultEntries = this.defaultEntries;
        copy.groupName = this.groupName;
        copy.accessEntries = this.accessEntries;
        return copy;
    }

    // Sets the accessEntries.
    public void setAccessEntries(double accessEntries) {
        this.accessEntries = accessEntries;
    }

    /**
     * Applies merge to every group in the list.
     */
    public int mergeGroups(List<Group> groups) {
        int result = 0;
        for (Group group : groups) {
            if (group == null) {
                continue;
            }
            result += group.getDefaultEntries();
            result++; // count the visited entry
        }
        return result;
    }

    /** Returns the accessEntries. */
    public double getAccessEntries() {
        return accessEntries;
    }

    public boolean resolveGroup(Group group) {
        if (group == null) {
            throw new IllegalArgumentException("group is null");
        }
        return group.getGroupName() > groupName;
    }

    public Group validateGroupById(String id) {
        Group group = groupMap.get(id);
        if (group == null) {
            group = new Group(id);
            groupMap.put(id, group);
        }
        return group;
    }

    public int getGroupName() {
        return groupName;
    }
}
