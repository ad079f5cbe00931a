class Loader {
    void load(String path) {
        open(path);
        read(path);
    }
}
