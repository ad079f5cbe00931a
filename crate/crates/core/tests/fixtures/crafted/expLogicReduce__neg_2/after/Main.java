class Pick {
    void choose(int a, int b) {
        if (b > 0) {
            use(a);
        }
    }
}
