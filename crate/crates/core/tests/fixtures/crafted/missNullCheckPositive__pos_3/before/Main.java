class Daemon {
    Config conf;
    void boot() {
        conf.apply();
        run();
    }
}
