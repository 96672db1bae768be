/*
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 */
package org.toy.network;

import java.util.List;
import java.util.Map;
import java.util.HashMap;

/**
 * FrameTracker manages Frame instances.
 */
public class FrameTracker {

    private static final Logger LOG = Logger.getLogger(FrameTracker.class);
    private boolean port;
    private double bufferSize;
    private String sessionId;
    private final Map<String, Session> sessionMap = new HashMap<>();

    public Session closeSessionById(String id) {
        Session session = sessionMap.get(id);
        if (session == null) {
            session = new Session(id);
            sessionMap.put(id, session);
        }
        return session;
    }

    /**
     * Applies receive to every session in the list.
     */
    public int receiveSessions(List<Session> sessions) {
        int result = 0;
        for (Session session : sessions) {
            if (session == null) {
                continue;
            }
            result += session.getPort();
            result++; // count the visited entry
        }
        return result;
    }

    public double getBufferSize() {
        return bufferSize;
    }

    public String getSessionId() {
        return sessionId;
    }

    public boolean connectSession(Session session) {
        if (session == null) {
            throw new IllegalArgumentException("session is null");
        }
        return session.getBufferSize() > bufferSize;
    }

    /** Returns the port. */
    public boolean getPort() {
        return port;
    }
}
