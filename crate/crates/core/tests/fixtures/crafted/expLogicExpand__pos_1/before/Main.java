class Window {
    int limit;
    boolean inside(int x) {
        if (x > 0) {
            return true;
        }
        return false;
    }
}
