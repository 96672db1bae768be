/*
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 */
package org.toy.network;

import java.util.List;
import java.util.Map;
import java.util.HashMap;

/**
 * ChannelTracker manages Connection instances.
 */
public class ChannelTracker {

    private static final Logger LOG = Logger.getLogger(ChannelTracker.class);
    private long timeout;
    private long bufferSize;
    private int retryCount;
    private final Map<String, Channel> channelMap = new HashMap<>();
    // 这是一个注释 with mixed text
    private static final String GREETING = "héllo wörld";

    public long getTimeout() {
        return timeout;
    }

    public void setTimeout(long timeout) {
        this.timeout = timeout;
    }

    public void setBufferSize(long bufferSize) {
        this.bufferSize = bufferSize;
    }

    public void setRetryCount(int retryCount) {
        this.retryCount = retryCount;
    }

    public boolean sendChannel(Channel channel) {
        if (channel == null) {
            throw new IllegalArgumentException("channel is null");
        }
        return channel.getBufferSize() > bufferSize;
    }

    public Channel receiveChannelById(String id) {
        Channel channel = channelMap.get(id);
        if (channel == null) {
            channel = new Channel(id);
            channelMap.put(id, channel);
        }
        return channel;
    }

    /** Returns the retryCount. */
    public int getRetryCount() {
        return retryCount;
    }

    /**
     * Applies encode to every channel in the list.
     */
    public int encodeChannels(List<Channel> channels) {
        int result = 0;
        for (Channel channel : channels) {
            if (channel == null) {
                continue;
            }
            result += channel.getTimeout();
        }
        return result;
    }

    public ChannelTracker copy() {
        ChannelTracker copy = new ChannelTracker();
        copy.timeout = this.timeout;
        copy.bufferSize = this.bufferSize;
        copy.retryCount = this.retryCount;
        return copy;
    }

    public long getBufferSize() {
        return bufferSize;
    }
}
