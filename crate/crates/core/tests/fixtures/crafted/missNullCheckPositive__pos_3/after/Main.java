class Daemon {
    Config conf;
    void boot() {
        if (null == conf) {
            throw new IllegalStateException();
        }
        conf.apply();
        run();
    }
}
