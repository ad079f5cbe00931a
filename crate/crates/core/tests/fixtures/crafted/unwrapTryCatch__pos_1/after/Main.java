class Sync {
    void sync() {
        pull();
        push();
    }
}
