class Repeater {
    void repeat(Object item, int times) {
        prepare();
        for (int i = 0; i < times; i++) {
            process(item);
        }
    }
}
