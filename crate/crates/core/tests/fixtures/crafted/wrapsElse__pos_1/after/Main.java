class Resolver {
    boolean cached;
    void resolve() {
        if (cached) {
            useCache();
        } else {
            load();
        }
    }
}
