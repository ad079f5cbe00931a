class Index {
    int previous(int i) {
        return i - 1;
    }
}
