class Worker {
    boolean running;
    boolean waiting;
    void loop() {
        while (running || waiting) {
            work();
        }
    }
}
