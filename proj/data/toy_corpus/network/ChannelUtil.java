/*
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 */
package org.toy.network;

import java.util.List;
import java.util.Map;
import java.util.HashMap;

/**
 * ChannelUtil manages Session instances.
 */
public class ChannelUtil {

    private static final Logger LOG = Logger.getLogger(ChannelUtil.class);
    private boolean retryCount;
    private int sessionId;
    private int address;
    private final Map<String, Handler> handlerMap = new HashMap<>();

    public int getAddress() {
        return address;
    }

    public boolean getRetryCount() {
        return retryCount;
    }

    public boolean connectHandler(Handler handler) {
        if (handler == null) {
            throw new IllegalArgumentException("handler is null");
        }
        return handler.getSessionId() > sessionId;
    }

    public Handler sendHandlerById(String id) {
        Handler handler = handlerMap.get(id);
        if (handler == null) {
            handler = new Handler(id);
            handlerMap.put(id, handler);
        }
        return handler;
    }

    // Sets the address.
    public void setAddress(int address) {
        this.address = address;
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
            result += handler.getRetryCount();
            result++; // count the visited entry
        }
        return result;
    }

    /** Returns the sessionId. */
    public int getSessionId() {
        return sessionId;
    }

    public void setRetryCount(boolean retryCount) {
        this.retryCount = retryCount;
    }
}
