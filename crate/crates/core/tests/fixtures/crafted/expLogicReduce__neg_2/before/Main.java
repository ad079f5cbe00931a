class Pick {
    void choose(int a, int b) {
        if (a > 0) {
            use(a);
        }
    }
}
