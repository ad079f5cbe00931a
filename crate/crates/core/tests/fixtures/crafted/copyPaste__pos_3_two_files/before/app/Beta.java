class Beta {
    void go() {
        move();
    }
}
