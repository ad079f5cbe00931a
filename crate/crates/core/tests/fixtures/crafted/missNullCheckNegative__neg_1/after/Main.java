class Compare {
    int diff(int a, int b) {
        if (a != b) {
            return 1;
        }
        int d = a - b;
        return d;
    }
}
