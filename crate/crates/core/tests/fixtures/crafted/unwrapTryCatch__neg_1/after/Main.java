class Io {
    void copy() {
        try {
            transfer();
        } catch (Exception e) {
            log(e);
        }
    }
}
