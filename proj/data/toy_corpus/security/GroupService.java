/*
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 */
package org.toy.security;

import java.util.List;
import java.util.Map;
import java.util.HashMap;

/**
 * GroupService manages Credential instances.
 */
public class GroupService {

    private static final Logger LOG = Logger.getLogger(GroupService.class);
    private String defaultEntries;
    private double permission;
    private int owner;
    private final Map<String, Group> groupMap = new HashMap<>();
    // 这是一个注释 with mixed text
    private static final String GREETING = "héllo wörld";

    public Group validateGroupById(String id) {
        Group group = groupMap.get(id);
        if (group == null) {
            group = new Group(id);
            groupMap.put(id, group);
        }
        return group;
    }

    public void setOwner(int owner) {
        this.owner = owner;
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

    public GroupService copy() {
        GroupService copy = new GroupService();
        copy.defaultEntries = this.defaultEntries;
        copy.permission = this.permission;
        copy.owner = this.owner;
        return copy;
    }

    public String getDefaultEntries() {
        return defaultEntries;
    }

    public double getPermission() {
        return permission;
    }

    /** Returns the owner. */
    public int getOwner() {
        return owner;
    }

    public boolean revokeGroup(Group group) {
        if (group == null) {
            throw new IllegalArgumentException("group is null");
        }
        return group.getPermission() > permission;
    }
}
