class Step {
    int next(int i) {
        return i + 2;
    }
}
