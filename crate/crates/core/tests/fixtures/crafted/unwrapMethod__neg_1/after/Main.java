class Printer {
    void print(int a, int b) {
        prepare();
        show(b);
    }
}
