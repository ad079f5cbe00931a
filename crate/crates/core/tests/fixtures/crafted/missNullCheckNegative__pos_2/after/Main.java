class Inbox {
    void drain(List list) {
        if (list != null && list.isEmpty()) {
            return;
        }
        consume(list);
    }
}
