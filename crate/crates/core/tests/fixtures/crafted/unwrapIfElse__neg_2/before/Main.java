class Bounds {
    boolean within(int a, int b) {
        return a > 0 && b > 0;
    }
}
