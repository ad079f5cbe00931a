class Service {
    boolean verbose;
    void start() {
        init();
        run();
    }
}
