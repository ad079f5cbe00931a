class Chooser {
    int pick(boolean flag, int a, int b) {
        return a;
    }
}
