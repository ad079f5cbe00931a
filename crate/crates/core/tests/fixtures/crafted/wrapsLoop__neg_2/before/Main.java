class Pipeline {
    void run() {
        fetch();
        transform();
        validate();
        publish();
    }
}
