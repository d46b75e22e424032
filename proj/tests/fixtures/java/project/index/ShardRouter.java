package org.opensearch.index;

class ShardRouter {
    boolean route() {
        boolean segrep = FeatureFlags.SEGMENT_REPLICATION;
        if (segrep) {
            return true;
        }
        return false;
    }
}
