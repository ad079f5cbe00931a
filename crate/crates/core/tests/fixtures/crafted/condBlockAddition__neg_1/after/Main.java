class Writer {
    boolean ready;
    void flush() {
        prepare();
        if (ready) {
            save();
        }
    }
}
