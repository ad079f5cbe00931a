class Ratio {
    int total;
    void divide(int x) {
        prepare();
        total = total / x;
        finish();
    }
}
