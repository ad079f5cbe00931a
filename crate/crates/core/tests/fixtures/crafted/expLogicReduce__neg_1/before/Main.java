class Filter {
    void apply(int a, int b) {
        prepare();
        if (a > 0 && b > 0) {
            emit(a);
        }
        done();
    }
}
