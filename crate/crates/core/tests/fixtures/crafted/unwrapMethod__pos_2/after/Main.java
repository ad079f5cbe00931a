class Label {
    Object text(int count) {
        return count;
    }
}
