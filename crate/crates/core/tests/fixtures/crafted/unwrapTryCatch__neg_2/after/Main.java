class Probe {
    void probe() {
        measure();
    }
}
