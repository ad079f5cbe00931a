class Engine {
    boolean ready;
    void go() {
        prepare();
        start();
    }
}
