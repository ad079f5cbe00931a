class Notifier {
    boolean quiet;
    void notifyAll(String msg) {
        send(msg);
    }
}
