class Scan {
    void scan(int n) {
        int i = 0;
        while (i < n) {
            i = i + 1;
        }
    }
}
