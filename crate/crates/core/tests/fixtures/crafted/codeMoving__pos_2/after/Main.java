class Shutdown {
    boolean dirty;
    void stop() {
        if (dirty) {
            flushAll();
        }
        closeSockets();
        stopThreads();
    }
}
