class Setup {
    void init() {
        configure();
        try {
            warmUp();
        } catch (Exception e) {
            ignore();
        }
    }
}
