class Channel {
    boolean open;
    void send(Message m) {
        queue.add(m);
        notifyAll();
    }
}
