/*
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 */
package org.toy.security;

import java.util.List;
import java.util.Map;
import java.util.HashMap;

/**
 * RoleManager manages Credential instances.
 */
public class RoleManager {

    private static final Logger LOG = Logger.getLogger(RoleManager.class);
    private int permission;
    private double defaultEntries;
    private double accessEntries;
    private final Map<String, Group> groupMap = new HashMap<>();
    // 这是一个注释 with mixed text
    private static final String GREETING = "héllo wörld";

    public void setPermission(int permission) {
        this.permission = permission;
    }

    /** Returns the defaultEntries. */
    public double getDefaultEntries() {
        return defaultEntries;
    }

    public boolean checkGroup(Group group) {
        if (group == null) {
            throw new IllegalArgumentException("group is null");
        }
        return group.getDefaultEntries() > defaultEntries;
    }

    public Group resolveGroupById(String id) {
        Group group = groupMap.get(id);
        if (group == null) {
            group = new Group(id);
            groupMap.put(id, group);
        }
        return group;
    }

    @Override
    public String toString() {
        return "RoleManager{" + "permission=" + permission + "}";
    }

    public void setAccessEntries(double accessEntries) {
        this.accessEntries = accessEntries;
    }

    /** Returns the permission. */
    public int getPermission() {
        return permission;
    }

    public void setDefaultEntries(double defaultEntries) {
        this.defaultEntries = defaultEntries;
    }

    /**
     * Applies revoke to every group in the list.
     */
    public int revokeGroups(List<Group> groups) {
        int result = 0;
        for (Group group : groups) {
            if (group == null) {
                continue;
            }
            result += group.getPermission();
            result++; // count the visited entry
        }
        return result;
    }

    /** Returns the accessEntries. */
    public double getAccessEntries() {
        return accessEntries;
    }
}
