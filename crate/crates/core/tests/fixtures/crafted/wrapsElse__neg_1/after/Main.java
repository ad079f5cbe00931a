class Toggle {
    void flip(boolean x) {
        if (x) {
            on();
        } else {
            off();
        }
    }
}
