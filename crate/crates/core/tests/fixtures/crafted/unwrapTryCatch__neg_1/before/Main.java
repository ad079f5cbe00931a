class Io {
    void copy() {
        try {
            transfer();
        } catch (IOException e) {
            log(e);
        }
    }
}
