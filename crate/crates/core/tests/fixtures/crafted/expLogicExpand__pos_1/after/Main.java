class Window {
    int limit;
    boolean inside(int x) {
        if (x > 0 && x < limit) {
            return true;
        }
        return false;
    }
}
