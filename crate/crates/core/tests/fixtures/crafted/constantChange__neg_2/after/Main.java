class Chooser {
    int get() {
        int a = 1;
        int b = 2;
        return b;
    }
}
