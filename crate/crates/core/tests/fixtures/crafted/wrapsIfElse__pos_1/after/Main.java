class Safe {
    int ratio(int x) {
        return x == 0 ? 0 : compute(x);
    }
}
