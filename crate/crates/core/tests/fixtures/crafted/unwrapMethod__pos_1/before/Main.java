class Mapper {
    int x;
    void map(int y) {
        x = f(y);
        done();
    }
}
