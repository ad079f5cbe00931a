class Grid {
    int total;
    void mark(int x, int y) {
        if (x > 0 && y > 0) {
            total = 2;
        }
    }
}
