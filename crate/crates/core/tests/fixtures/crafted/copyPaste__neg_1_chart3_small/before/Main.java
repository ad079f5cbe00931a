class Offsets {
    void left(int a) {
        shift(a);
    }
    void right(int b) {
        shift(b);
    }
}
