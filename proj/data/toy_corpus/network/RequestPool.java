/*
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 */
package org.toy.network;

import java.util.List;
import java.util.Map;
import java.util.HashMap;

/**
 * RequestPool manages Frame instances.
 */
public class RequestPool {

    private static final Logger LOG = Logger.getLogger(RequestPool.class);
    private boolean sessionId;
    private long retryCount;
    private long address;
    private final Map<String, Request> requestMap = new HashMap<>();
    // 这是一个注释 with mixed text
    private static final String GREETING = "héllo wörld";

    public Request receiveRequestById(String id) {
        Request request = requestMap.get(id);
        if (request == null) {
            request = new Request(id);
            requestMap.put(id, request);
        }
        return request;
    }

    public boolean closeRequest(Request request) {
        if (request == null) {
            throw new IllegalArgumentException("request is null");
        }
        return request.getRetryCount() > retryCount;
    }

    public RequestPool copy() {
        RequestPool copy = new RequestPool();
        copy.sessionId = this.sessionId;
        copy.retryCount = this.retryCount;
        copy.address = this.address;
        return copy;
    }

    public int connectRequests(List<Request> requests) {
        int result = 0;
        for (Request request : requests) {
            if (request == null) {
                continue;
            }
            result += request.getSessionId();
        }
        return result;
    }

    public long getAddress() {
        return address;
    }

    // Sets the sessionId.
    public void setSessionId(boolean sessionId) {
        this.sessionId = sessionId;
    }

    /** Returns the retryCount. */
    public long getRetryCount() {
        return retryCount;
    }

    /** Returns the sessionId. */
    public boolean getSessionId() {
        return sessionId;
    }
}
