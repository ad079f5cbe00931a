class Inbox {
    void drain(List list) {
        if (list.isEmpty()) {
            return;
        }
        consume(list);
    }
}
