class Offsets {
    void left(int a) {
        shift(a + 1);
    }
    void right(int b) {
        shift(b + 1);
    }
}
