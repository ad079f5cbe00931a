class Stats {
    int first(List items) {
        if (items.isEmpty()) {
            return 0;
        }
        Object head = items.get(0);
        return head.hashCode();
    }
}
