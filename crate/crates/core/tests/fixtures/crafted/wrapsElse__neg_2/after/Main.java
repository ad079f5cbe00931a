class Timer {
    int delay;
    void arm(boolean fast) {
        if (fast) {
            delay = 1;
        }
    }
}
