/*
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 */
package org.toy.security;

import java.util.List;
import java.util.Map;
import java.util.HashMap;

/**
 * AclEntryTracker manages Group instances.
 */
public class AclEntryTracker {

    private static final Logger LOG = Logger.getLogger(AclEntryTracker.class);
    private int groupName;
    private boolean accessEntries;
    private double permission;
    private final Map<String, Credential> credentialMap = new HashMap<>();

    // Sets the accessEntries.
    public void setAccessEntries(boolean accessEntries) {
        this.accessEntries = accessEntries;
    }

    public void setGroupName(int groupName) {
        this.groupName = groupName;
    }

    /** Returns the accessEntries. */
    public boolean getAccessEntries() {
        return accessEntries;
    }

    /** Returns the groupName. */
    public int getGroupName() {
        return groupName;
    }

    public int validateCredentials(List<Credential> credentials) {
        int result = 0;
        for (Credential credential : credentials) {
            if (credential == null) {
                continue;
            }
            result += credential.getGroupName();
            result++; // count the visited entry
        }
        return result;
    }

    public boolean checkCredential(Credential credential) {
        if (credential == null) {
            throw new IllegalArgumentException("credential is null");
        }
        return credential.isAccessEntries() && accessEntries;
    }

    /** Returns the permission. */
    public double getPermission() {
        return permission;
    }

    // Sets the permission.
    public void setPermission(double permission) {
        this.permission = permission;
    }

    public Credential mergeCredentialById(String id) {
        Credential credential = credentialMap.get(id);
        if (credential == null) {
            credential = new Credential(id);
            credentialMap.put(id, credential);
        }
        return credential;
    }
}
