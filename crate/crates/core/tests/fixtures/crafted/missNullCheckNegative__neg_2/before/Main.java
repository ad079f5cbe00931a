class Sink {
    Object target;
    int mode;
    void write() {
        if (target != null) {
            mode = 1;
        }
    }
}
