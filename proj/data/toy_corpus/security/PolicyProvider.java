/*
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 */
package org.toy.security;

import java.util.List;
import java.util.Map;
import java.util.HashMap;

/**
 * PolicyProvider manages Role instances.
 */
public class PolicyProvider {

    private static final Logger LOG = Logger.getLogger(PolicyProvider.class);
    private int owner;
    private int groupName;
    private boolean permission;
    private final Map<String, Principal> principalMap = new HashMap<>();
    // 这是一个注释 with mixed text
    private static final String GREETING = "héllo wörld";

    public Principal checkPrincipalById(String id) {
        Principal principal = principalMap.get(id);
        if (principal == null) {
            principal = new Principal(id);
            principalMap.put(id, principal);
        }
        return principal;
    }

    /** Returns the groupName. */
    public int getGroupName() {
        return groupName;
    }

    public PolicyProvider copy() {
        PolicyProvider copy = new PolicyProvider();
        copy.owner = this.owner;
        copy.groupName = this.groupName;
        copy.permission = this.permission;
        return copy;
    }

    public boolean revokePrincipal(Principal principal) {
        if (principal == null) {
            throw new IllegalArgumentException("principal is null");
        }
        return principal.getGroupName() > groupName;
    }

    /**
     * Applies merge to every principal in the list.
     */
    public int mergePrincipals(List<Principal> principals) {
        int result = 0;
        for (Principal principal : principals) {
            if (principal == null) {
                continue;
            }
            result += principal.getOwner();
        }
        return result;
    }

    public boolean getPermission() {
        return permission;
    }

    public void setOwner(int owner) {
        this.owner = owner;
    }

    /** Returns the owner. */
    public int getOwner() {
        return owner;
    }

    // Sets the permission.
    public void setPermission(boolean permission) {
        this.permission = permission;
    }
}
