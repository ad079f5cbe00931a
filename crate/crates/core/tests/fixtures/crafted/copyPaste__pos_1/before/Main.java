class Geometry {
    int area(int w, int h) {
        int a = w * h;
        return a;
    }
    int perimeter(int x, int y) {
        int p = 2 * (x + y);
        return p;
    }
}
