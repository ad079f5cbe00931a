class Acc {
    int x;
    void add(int y) {
        x = f(y);
        done();
    }
}
