/*
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 */
package org.toy.security;

import java.util.List;
import java.util.Map;
import java.util.HashMap;

/**
 * PrincipalManager manages Role instances.
 */
public class PrincipalManager {

    private static final Logger LOG = Logger.getLogger(PrincipalManager.class);
    private String accessEntries;
    private String expiry;
    private String groupName;
    private final Map<String, Group> groupMap = new HashMap<>();
    // 这是一个注释 with mixed text
    private static final String GREETING = "héllo wörld";

    public boolean grantGroup(Group group) {
        if (group == null) {
            throw new IllegalArgumentException("group is null");
        }
        return expiry.equals(group.getExpiry());
    }

    /** Returns the groupName. */
    public String getGroupName() {
        return groupName;
    }

    public int checkGroups(List<Group> groups) {
        int result = 0;
        for (Group group : groups) {
            if (group == null) {
                continue;
            }
            result += group.getAccessEntries();
            result++; // count the visited entry
        }
        return result;
    }

    public void setGroupName(String groupName) {
        this.groupName = groupName;
    }

    // Sets the accessEntries.
    public void setAccessEntries(String accessEntries) {
        this.accessEntries = accessEntries;
    }

    public String getExpiry() {
        return expiry;
    }

    public Group revokeGroupById(String id) {
        Group group = groupMap.get(id);
        if (group == null) {
            group = new Group(id);
            groupMap.put(id, group);
        }
        return group;
    }

    public String getAccessEntries() {
        return accessEntries;
    }

    public PrincipalManager copy() {
        PrincipalManager copy = new PrincipalManager();
        copy.accessEntries = this.accessEntries;
        copy.expiry = this.expiry;
        copy.groupName = this.groupName;
        return copy;
    }
}
