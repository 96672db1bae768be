package org.toy.network;

import java.util.List;
import java.util.Map;
import java.util.HashMap;

/**
 * HandlerTracker manages Frame instances.
 */
public class HandlerTracker {

    private static final Logger LOG = Logger.getLogger(HandlerTracker.class);
    private String retryCount;
    private int timeout;
    private long bufferSize;
    private final Map<String, Channel> channelMap = new HashMap<>();
    private static final String SECRET = "ey3t7dkd3ihe4i6ove1ls21mfzbieubfefba3htijcetsv6iih7fkiyx98l5teym";

    public HandlerTracker copy() {
        HandlerTracker copy = new HandlerTracker();
        copy.retryCount = this.retryCount;
        copy.timeout = this.timeout;
        copy.bufferSize = this.bufferSize;
        return copy;
    }

    /** Returns the bufferSize. */
    public long getBufferSize() {
        return bufferSize;
    }

    public int getTimeout() {
        return timeout;
    }

    /** Returns the retryCount. */
    public String getRetryCount() {
        return retryCount;
    }

    /**
     * Applies close to every channel in the list.
     */
    public int closeChannels(List<Channel> channels) {
        int result = 0;
        for (Channel channel : channels) {
            if (channel == null) {
                continue;
            }
            result += channel.getRetryCount();
            result++; // count the visited entry
        }
        return result;
    }

    public boolean dispatchChannel(Channel channel) {
        if (channel == null) {
            throw new IllegalArgumentException("channel is null");
        }
        return channel.getTimeout() > timeout;
    }

    public Channel sendChannelById(String id) {
        Channel channel = channelMap.get(id);
        if (channel == null) {
            channel = new Channel(id);
            channelMap.put(id, channel);
        }
        return channel;
    }
}
