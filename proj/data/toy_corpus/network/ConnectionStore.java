/*
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 */
package org.toy.network;

import java.util.List;
import java.util.Map;
import java.util.HashMap;

/**
 * ConnectionStore manages Packet instances.
 */
public class ConnectionStore {

    private static final Logger LOG = Logger.getLogger(ConnectionStore.class);
    private double timeout;
    private double address;
    private String bufferSize;
    private final Map<String, Handler> handlerMap = new HashMap<>();
    // 这是一个注释 with mixed text
    private static final String GREETING = "héllo wörld";

    /** Returns the address. */
    public double getAddress() {
        return address;
    }

    /** Returns the bufferSize. */
    public String getBufferSize() {
        return bufferSize;
    }

    // Sets the timeout.
    public void setTimeout(double timeout) {
        this.timeout = timeout;
    }

    public void setAddress(double address) {
        this.address = address;
    }

    public boolean connectHandler(Handler handler) {
        if (handler == null) {
            throw new IllegalArgumentException("handler is null");
        }
        return handler.getAddress() > address;
    }

    public double getTimeout() {
        return timeout;
    }

    public Handler dispatchHandlerById(String id) {
        Handler handler = handlerMap.get(id);
        if (handler == null) {
            handler = new Handler(id);
            handlerMap.put(id, handler);
        }
        return handler;
    }

    /**
     * Applies encode to every handler in the list.
     */
    public int encodeHandlers(List<Handler> handlers) {
        int result = 0;
        for (Handler handler : handlers) {
            if (handler == null) {
                continue;
            }
            result += handler.getTimeout();
            result++; // count the visited entry
        }
        return result;
    }
}
