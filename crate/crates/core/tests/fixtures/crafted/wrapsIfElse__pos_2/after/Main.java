class Store {
    boolean remote;
    void persist() {
        prepare();
        if (remote) {
            save();
        } else {
            saveLocal();
        }
    }
}
