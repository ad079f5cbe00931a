class Origin {
    int start() {
        return 0;
    }
}
