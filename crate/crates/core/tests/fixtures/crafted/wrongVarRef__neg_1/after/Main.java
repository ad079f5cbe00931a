class Tally {
    int tally() {
        int count = 0;
        count++;
        return count;
    }
}
