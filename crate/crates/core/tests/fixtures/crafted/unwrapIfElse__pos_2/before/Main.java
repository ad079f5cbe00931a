class Chooser {
    int pick(boolean flag, int a, int b) {
        return flag ? a : b;
    }
}
