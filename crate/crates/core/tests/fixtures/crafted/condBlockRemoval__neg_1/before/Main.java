class Engine {
    boolean ready;
    void go() {
        prepare();
        if (ready) {
            start();
        }
    }
}
