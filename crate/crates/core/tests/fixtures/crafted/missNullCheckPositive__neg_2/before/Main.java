class Divider {
    void divide(int x) {
        apply(x);
    }
}
