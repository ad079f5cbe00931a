class Buffer {
    int[] data;
    void resize(int size) {
        if (size < 0) {
            throw new IllegalArgumentException("size");
        }
        data = new int[size];
    }
}
