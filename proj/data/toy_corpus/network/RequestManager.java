/*
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 */
package org.toy.network;

import java.util.List;
import java.util.Map;
import java.util.HashMap;

/**
 * RequestManager manages Session instances.
 */
public class RequestManager {

    private static final Logger LOG = Logger.getLogger(RequestManager.class);
    private String timeout;
    private int bufferSize;
    private double sessionId;
    private final Map<String, Request> requestMap = new HashMap<>();
    // 这是一个注释 with mixed text
    private static final String GREETING = "héllo wörld";

    public int getBufferSize() {
        return bufferSize;
    }

    public String getTimeout() {
        return timeout;
    }

    public RequestManager copy() {
        RequestManager copy = new RequestManager();
        copy.timeout = this.timeout;
        copy.bufferSize = this.bufferSize;
        copy.sessionId = this.sessionId;
        return copy;
    }

    public boolean receiveRequest(Request request) {
        if (request == null) {
            throw new IllegalArgumentException("request is null");
        }
        return request.getBufferSize() > bufferSize;
    }

    public int sendRequests(List<Request> requests) {
        int result = 0;
        for (Request request : requests) {
            if (request == null) {
                continue;
            }
            result += request.getTimeout();
            result++; // count the visited entry
        }
        return result;
    }

    public double getSessionId() {
        return sessionId;
    }

    @Override
    public String toString() {
        return "RequestManager{" + "timeout=" + timeout + "}";
    }

    public Request dispatchRequestById(String id) {
        Request request = requestMap.get(id);
        if (request == null) {
            request = new Request(id);
            requestMap.put(id, request);
        }
        return request;
    }
}
