class View {
    boolean enabled;
    void paint() {
        clear();
        if (enabled) {
            render();
            update();
        }
    }
}
