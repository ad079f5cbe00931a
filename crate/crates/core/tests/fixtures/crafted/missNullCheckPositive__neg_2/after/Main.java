class Divider {
    void divide(int x) {
        if (x == 0) {
            return;
        }
        apply(x);
    }
}
