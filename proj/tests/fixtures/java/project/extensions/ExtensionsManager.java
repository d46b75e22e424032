package org.opensearch.extensions;

public class ExtensionsManager {
    // EXTENSIONS is read once at startup
    private final String name = "EXTENSIONS";
}
