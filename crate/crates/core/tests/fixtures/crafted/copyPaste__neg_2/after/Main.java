class Session {
    int retries;
    void connect() {
        open();
        if (retries > 3) {
            retries = 0;
            backoff();
        }
        login();
    }
}
