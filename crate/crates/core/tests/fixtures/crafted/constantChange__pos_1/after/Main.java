class Origin {
    int start() {
        return 1;
    }
}
