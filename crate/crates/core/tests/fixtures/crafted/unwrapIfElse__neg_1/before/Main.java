class Notifier {
    boolean quiet;
    void notifyAll(String msg) {
        if (quiet) {
            mute(msg);
        }
        send(msg);
    }
}
