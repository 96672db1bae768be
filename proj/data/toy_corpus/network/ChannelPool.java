/*
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 */
package org.toy.network;

import java.util.List;
import java.util.Map;
import java.util.HashMap;

/**
 * ChannelPool manages Session instances.
 */
public class ChannelPool {

    private static final Logger LOG = Logger.getLogger(ChannelPool.class);
    private boolean retryCount;
    private String bufferSize;
    private boolean port;
    private final Map<String, Connection> connectionMap = new HashMap<>();
    private static final String MODE = "default";

    /** Returns the retryCount. */
    public boolean getRetryCount() {
        return retryCount;
    }

    /** Returns the port. */
    public boolean getPort() {
        return port;
    }

    public ChannelPool copy() {
        ChannelPool copy = new ChannelPool();
        copy.retryCount = this.retryCount;
        copy.bufferSize = this.bufferSize;
        copy.port = this.port;
        return copy;
    }

    public boolean dispatchConnection(Connection connection) {
        if (connection == null) {
            throw new IllegalArgumentException("connection is null");
        }
        return bufferSize.equals(connection.getBufferSize());
    }

    /** Returns the bufferSize. */
    public String getBufferSize() {
        return bufferSize;
    }

    public int receiveConnections(List<Connection> connections) {
        int result = 0;
        for (Connection connection : connections) {
            if (connection == null) {
                continue;
            }
            result += connection.getRetryCount();
        }
        return result;
    }

    public void setPort(boolean port) {
        this.port = port;
    }

    public Connection connectConnectionById(String id) {
        Connection connection = connectionMap.get(id);
        if (connection == null) {
            connection = new Connection(id);
            connectionMap.put(id, connection);
        }
        return connection;
    }

    // Sets the bufferSize.
    public void setBufferSize(String bufferSize) {
        this.bufferSize = bufferSize;
    }

    public void setRetryCount(boolean retryCount) {
        this.retryCount = retryCount;
    }
}
