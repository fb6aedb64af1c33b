"""Pattern registry and graph file access."""
