class Label {
    Object text(int count) {
        return String.valueOf(count);
    }
}
