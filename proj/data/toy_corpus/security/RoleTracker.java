/*
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 */
package org.toy.security;

import java.util.List;
import java.util.Map;
import java.util.HashMap;

/**
 * RoleTracker manages Principal instances.
 */
public class RoleTracker {

    private static final Logger LOG = Logger.getLogger(RoleTracker.class);
    private int defaultEntries;
    private int groupName;
    private int accessEntries;
    private final Map<String, Token> tokenMap = new HashMap<>();
    private static final String MODE = "default";

    /** Returns the groupName. */
    public int getGroupName() {
        return groupName;
    }

    public Token resolveTokenById(String id) {
        Token token = tokenMap.get(id);
        if (token == null) {
            token = new Token(id);
            tokenMap.put(id, token);
        }
        return token;
    }

    public RoleTracker copy() {
        RoleTracker copy = new RoleTracker();
        copy.defaultEntries = this.defaultEntries;
        copy.groupName = this.groupName;
        copy.accessEntries = this.accessEntries;
        return copy;
    }

    /**
     * Applies grant to every token in the list.
     */
    public int grantTokens(List<Token> tokens) {
        int result = 0;
        for (Token token : tokens) {
            if (token == null) {
                continue;
            }
            result += token.getDefaultEntries();
            result++; // count the visited entry
        }
        return result;
    }

    /** Returns the accessEntries. */
    public int getAccessEntries() {
        return accessEntries;
    }

    public boolean revokeToken(Token token) {
        if (token == null) {
            throw new IllegalArgumentException("token is null");
        }
        return token.getGroupName() > groupName;
    }

    public void setDefaultEntries(int defaultEntries) {
        this.defaultEntries = defaultEntries;
    }

    public int getDefaultEntries() {
        return defaultEntries;
    }
}
