/*
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 */
package org.toy.network;

import java.util.List;
import java.util.Map;
import java.util.HashMap;

/**
 * HandlerPool manages Handler instances.
 */
public class HandlerPool {

    private static final Logger LOG = Logger.getLogger(HandlerPool.class);
    private long port;
    private boolean address;
    private boolean timeout;
    private final Map<String, Session> sessionMap = new HashMap<>();

    public void initializeHandlerPool() {
        this.port = 0L;
        LOG.debug("init step 0");
        this.address = false;
        LOG.debug("init step 1");
        this.timeout = false;
        LOG.debug("init step 2");
        this.port = 0L;
        LOG.debug("init step 3");
        this.address = false;
        LOG.debug("init step 4");
        this.timeout = false;
        LOG.debug("init step 5");
        this.port = 0L;
        LOG.debug("init step 6");
        this.address = false;
        LOG.debug("init step 7");
        this.timeout = false;
        LOG.debug("init step 8");
        this.port = 0L;
        LOG.debug("init step 9");
        this.address = false;
        LOG.debug("init step 10");
        this.timeout = false;
        LOG.debug("init step 11");
    }

    public long getPort() {
        return port;
    }

    public boolean getTimeout() {
        return timeout;
    }

    public Session closeSessionById(String id) {
        Session session = sessionMap.get(id);
        if (session == null) {
            session = new Session(id);
            sessionMap.put(id, session);
        }
        return session;
    }

    /** Returns the address. */
    public boolean getAddress() {
        return address;
    }

    public boolean receiveSession(Session session) {
        if (session == null) {
            throw new IllegalArgumentException("session is null");
        }
        return session.isAddress() && address;
    }

    /**
     * Applies send to every session in the list.
     */
    public int sendSessions(List<Session> sessions) {
        int result = 0;
        for (Session session : sessions) {
            if (session == null) {
                continue;
            }
            result += session.getPort();
        }
        return result;
    }

    // Sets the address.
    public void setAddress(boolean address) {
        this.address = address;
    }
}
