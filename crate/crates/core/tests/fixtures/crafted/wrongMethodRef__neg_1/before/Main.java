class Sizer {
    int count;
    int size() {
        return 3;
    }
    void measure() {
        count = size();
    }
}
