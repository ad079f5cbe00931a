class Cache {
    int hits;
    void hit() {
        hits = hits + 1;
        flush();
    }
}
