class Ratio {
    int total;
    void divide(int x) {
        prepare();
        if (x > 0) {
            total = total / x;
        }
        finish();
    }
}
