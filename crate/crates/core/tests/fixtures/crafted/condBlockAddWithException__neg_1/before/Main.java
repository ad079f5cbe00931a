class Door {
    void close() {
        if (locked) {
            throw new IllegalStateException("open");
        }
        state = 0;
    }
}
