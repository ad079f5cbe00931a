class Logger {
    void trace(String a, String b) {
        log(a, b);
        flush();
    }
}
