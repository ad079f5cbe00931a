class Fetcher {
    void log(Exception e) {
    }
    void report(Exception e) {
    }
    void fetch(String url) {
        try {
            download(url);
        } catch (Exception e) {
            log(e);
        }
    }
}
