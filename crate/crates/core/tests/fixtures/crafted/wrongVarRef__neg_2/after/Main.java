class Zero {
    int zero() {
        return 1;
    }
}
