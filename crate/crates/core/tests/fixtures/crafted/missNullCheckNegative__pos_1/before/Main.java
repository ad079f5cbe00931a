class Event {
    Listener owner;
    void fire() {
        prepare();
        owner.notifyChange();
    }
}
