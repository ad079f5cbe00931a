class Door {
    void close() {
        if (locked) {
            throw new IllegalStateException("locked");
        }
        state = 0;
    }
}
