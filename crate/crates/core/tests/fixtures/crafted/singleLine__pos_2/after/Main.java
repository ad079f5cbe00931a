class Caller {
    void invoke(int a, int b) {
        call(a, true,
                b, false);
        done();
    }
}
