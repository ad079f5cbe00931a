class Renderer {
    boolean visible;
    void frame() {
        clear();
        if (visible) {
            draw();
        }
        swap();
    }
}
