class Tracer {
    void step(int x) {
        compute(x);
        finish(x);
    }
}
