class Rect {
    int width;
    int height;
    int total;
    void grow() {
        total = total + width;
    }
}
