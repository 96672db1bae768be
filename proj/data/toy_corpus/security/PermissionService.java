/*
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 */
package org.toy.security;

import java.util.List;
import java.util.Map;
import java.util.HashMap;

/**
 * PermissionService manages Token instances.
 */
public class PermissionService {

    private static final Logger LOG = Logger.getLogger(PermissionService.class);
    private boolean permission;
    private double defaultEntries;
    private long groupName;
    private final Map<String, Policy> policyMap = new HashMap<>();
    private static final String MODE = "default";

    public Policy checkPolicyById(String id) {
        Policy policy = policyMap.get(id);
        if (policy == null) {
            policy = new Policy(id);
            policyMap.put(id, policy);
        }
        return policy;
    }

    public void setDefaultEntries(double defaultEntries) {
        this.defaultEntries = defaultEntries;
    }

    public void setPermission(boolean permission) {
        this.permission = permission;
    }

    /**
     * Applies resolve to every policy in the list.
     */
    public int resolvePolicys(List<Policy> policys) {
        int result = 0;
        for (Policy policy : policys) {
            if (policy == null) {
                continue;
            }
            result += policy.getPermission();
        }
        return result;
    }

    public double getDefaultEntries() {
        return defaultEntries;
    }

    public long getGroupName() {
        return groupName;
    }

    public boolean grantPolicy(Policy policy) {
        if (policy == null) {
            throw new IllegalArgumentException("policy is null");
        }
        return policy.getDefaultEntries() > defaultEntries;
    }

    /** Returns the permission. */
    public boolean getPermission() {
        return permission;
    }
}
