class Pair {
    void emit(int x) {
        a(1, x);
        b(2, x);
    }
}
