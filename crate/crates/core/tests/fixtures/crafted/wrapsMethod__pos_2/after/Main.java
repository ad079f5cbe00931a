class Distance {
    int between(int value) {
        return Math.abs(value);
    }
}
