class Boot {
    void start() {
        loadConfig();
        openSockets();
        startThreads();
        announce();
    }
}
