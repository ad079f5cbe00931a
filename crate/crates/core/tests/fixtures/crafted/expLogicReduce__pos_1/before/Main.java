class Quadrant {
    boolean first(int a, int b) {
        if (a > 0 && b > 0) {
            return true;
        }
        return false;
    }
}
