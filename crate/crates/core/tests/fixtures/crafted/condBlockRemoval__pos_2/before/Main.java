class Limiter {
    int count;
    int max;
    void add(int n) {
        count = count + n;
        if (count > max) {
            count = max;
        }
    }
}
