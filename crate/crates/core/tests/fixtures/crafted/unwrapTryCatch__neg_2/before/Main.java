class Probe {
    void probe() {
        measure();
        try {
            calibrate();
        } catch (Exception e) {
            reset();
        }
    }
}
