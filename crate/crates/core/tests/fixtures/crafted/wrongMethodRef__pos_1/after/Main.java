class Remote {
    void ping(Server x) {
        x.open();
        x.bar();
    }
}
