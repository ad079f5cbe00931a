class Counter {
    int count;
    void tick() {
        count = count + 1;
        if (count > 10) {
            reset();
        }
        save();
    }
}
