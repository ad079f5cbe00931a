class Range {
    boolean above(int a, int b) {
        if (a >= b) {
            return true;
        }
        return false;
    }
}
