class Audit {
    void record(int v) {
        store(v);
        if (v > 1000) {
            alert(v);
        }
        flush();
    }
}
