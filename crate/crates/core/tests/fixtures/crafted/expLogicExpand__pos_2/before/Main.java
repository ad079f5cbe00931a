class Gate {
    void pass(boolean a, boolean b) {
        if (a) {
            open();
        }
    }
}
