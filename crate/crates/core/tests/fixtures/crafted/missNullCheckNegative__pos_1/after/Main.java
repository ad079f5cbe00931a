class Event {
    Listener owner;
    void fire() {
        prepare();
        if (owner != null) {
            owner.notifyChange();
        }
    }
}
