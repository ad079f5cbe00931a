class Tracer {
    void step(int x) {
        compute(x);
        log("step");
        finish(x);
    }
}
