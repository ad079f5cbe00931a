class Queue {
    Object poll(List items) {
        if (items.isEmpty()) {
            return null;
        }
        Object head = items.remove(0);
        return head;
    }
}
