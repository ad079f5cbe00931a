class Norm {
    int norm(int value) {
        return Math.abs(value);
    }
}
