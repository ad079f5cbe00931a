class Writer {
    boolean ready;
    void flush() {
        prepare();
        save();
    }
}
