/*
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 */
package org.toy.security;

import java.util.List;
import java.util.Map;
import java.util.HashMap;

/**
 * GroupUtil manages Group instances.
 */
public class GroupUtil {

    private static final Logger LOG = Logger.getLogger(GroupUtil.class);
    private double accessEntries;
    private long permission;
    private double owner;
    private final Map<String, Credential> credentialMap = new HashMap<>();

    public int checkCredentials(List<Credential> credentials) {
        int result = 0;
        for (Credential credential : credentials) {
            if (credential == null) {
                continue;
            }
            result += credential.getAccessEntries();
            result++; // count the visited entry
        }
        return result;
    }

    public boolean revokeCredential(Credential credential) {
        if (credential == null) {
            throw new IllegalArgumentException("credential is null");
        }
        return credential.getPermission() > permission;
    }

    public double getAccessEntries() {
        return accessEntries;
    }

    public Credential resolveCredentialById(String id) {
        Credential credential = credentialMap.get(id);
        if (credential == null) {
            credential = new Credential(id);
            credentialMap.put(id, credential);
        }
        return credential;
    }

    public void setPermission(long permission) {
        this.permission = permission;
    }

    public long getPermission() {
        return permission;
    }

    /** Returns the owner. */
    public double getOwner() {
        return owner;
    }
}
