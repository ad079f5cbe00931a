class Compare {
    int diff(int a, int b) {
        int d = a - b;
        return d;
    }
}
