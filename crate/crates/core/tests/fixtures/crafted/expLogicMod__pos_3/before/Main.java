class Validator {
    boolean valid;
    boolean rejects() {
        return !valid;
    }
}
