class Poller {
    void poll(int n) {
        int i = 0;
        while (i < n && !done) {
            i = i + 1;
        }
    }
}
