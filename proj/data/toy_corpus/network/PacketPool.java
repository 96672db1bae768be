/*
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 */
package org.toy.network;

import java.util.List;
import java.util.Map;
import java.util.HashMap;

/**
 * PacketPool manages Session instances.
 */
public class PacketPool {

    private static final Logger LOG = Logger.getLogger(PacketPool.class);
    private int sessionId;
    private int retryCount;
    private String port;
    private final Map<String, Channel> channelMap = new HashMap<>();
    private static final String MODE = "default";

    /**
     * Applies connect to every channel in the list.
     */
    public int connectChannels(List<Channel> channels) {
        int result = 0;
        for (Channel channel : channels) {
            if (channel == null) {
                continue;
            }
            result += channel.getSessionId();
        }
        return result;
    }

    public Channel encodeChannelById(String id) {
        Channel channel = channelMap.get(id);
        if (channel == null) {
            channel = new Channel(id);
            channelMap.put(id, channel);
        }
        return channel;
    }

    /** Returns the port. */
    public String getPort() {
        return port;
    }

    public boolean closeChannel(Channel channel) {
        if (channel == null) {
            throw new IllegalArgumentException("channel is null");
        }
        return channel.getRetryCount() > retryCount;
    }

    public int getSessionId() {
        return sessionId;
    }

    /** Returns the retryCount. */
    public int getRetryCount() {
        return retryCount;
    }

    public void setSessionId(int sessionId) {
        this.sessionId = sessionId;
    }

    public void setRetryCount(int retryCount) {
        this.retryCount = retryCount;
    }
}
