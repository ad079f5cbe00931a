class Gauge {
    int level(int a) {
        if (a >= 0) {
            return a;
        }
        return 0;
    }
}
