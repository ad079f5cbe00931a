class Queue {
    Object poll(List items) {
        Object head = items.remove(0);
        return head;
    }
}
