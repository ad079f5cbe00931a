class Stats {
    int first(List items) {
        Object head = items.get(0);
        return head.hashCode();
    }
}
