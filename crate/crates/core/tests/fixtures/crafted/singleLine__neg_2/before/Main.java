class Pair {
    void emit(int x) {
        a(1);
        b(2);
    }
}
