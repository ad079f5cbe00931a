class Registry {
    void touch(String k) {
        count(k);
    }
}
