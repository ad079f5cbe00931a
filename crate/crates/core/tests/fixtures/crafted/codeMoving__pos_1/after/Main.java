class Init {
    void init() {
        second();
        third();
        first();
        fourth();
    }
}
