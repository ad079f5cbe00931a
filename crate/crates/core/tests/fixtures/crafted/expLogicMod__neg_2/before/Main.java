class Client {
    void call(Server x) {
        x.connect();
        x.foo();
    }
}
