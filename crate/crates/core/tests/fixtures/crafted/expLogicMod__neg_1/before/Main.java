class Config {
    int limit;
    void reset() {
        limit = 10;
    }
}
