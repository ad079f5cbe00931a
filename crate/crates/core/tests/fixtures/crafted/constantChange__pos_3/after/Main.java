class Net {
    static final int DEFAULT_TIMEOUT = 10;
    static final int MAX_TIMEOUT = 60;
    int timeout;
    void configure() {
        timeout = MAX_TIMEOUT;
    }
}
