class Geometry {
    int area(int w, int h) {
        if (w < 0) {
            w = 0;
        }
        int a = w * h;
        return a;
    }
    int perimeter(int x, int y) {
        if (x < 0) {
            x = 0;
        }
        int p = 2 * (x + y);
        return p;
    }
}
