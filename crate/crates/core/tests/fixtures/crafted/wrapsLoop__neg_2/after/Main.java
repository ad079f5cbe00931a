class Pipeline {
    void run() {
        fetch();
        validate();
        publish();
        transform();
    }
}
