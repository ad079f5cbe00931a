class Beta {
    void go() {
        log.trace("enter");
        move();
    }
}
