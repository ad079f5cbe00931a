class Canvas {
    void drawA(Graphics g, int scale) {
        g.reset();
        render(g, 1, scale);
    }
    void drawB(Graphics h, int scale) {
        h.clear();
        render(h, 1, scale);
    }
}
