class Zero {
    int zero() {
        return 0;
    }
}
