class Renderer {
    boolean visible;
    void frame() {
        clear();
        draw();
        swap();
    }
}
