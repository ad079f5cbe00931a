class Clean {
    String name;
    void set(String input) {
        name = input.trim();
        send();
    }
}
