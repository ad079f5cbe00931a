class Repeater {
    void repeat(Object item, int times) {
        prepare();
        process(item);
    }
}
