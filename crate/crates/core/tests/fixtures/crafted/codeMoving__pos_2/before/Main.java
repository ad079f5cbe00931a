class Shutdown {
    boolean dirty;
    void stop() {
        closeSockets();
        stopThreads();
        if (dirty) {
            flushAll();
        }
    }
}
