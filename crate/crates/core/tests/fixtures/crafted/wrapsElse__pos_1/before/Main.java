class Resolver {
    boolean cached;
    void resolve() {
        if (cached) {
            useCache();
        }
        load();
    }
}
