class Filter {
    void apply(int a, int b) {
        prepare();
        done();
    }
}
