class Tally {
    int tally() {
        int tmp = 0;
        tmp++;
        return tmp;
    }
}
