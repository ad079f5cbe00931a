class Loader {
    void load(String path) {
        try {
            open(path);
            read(path);
        } catch (IOException e) {
            report(e);
        }
    }
}
