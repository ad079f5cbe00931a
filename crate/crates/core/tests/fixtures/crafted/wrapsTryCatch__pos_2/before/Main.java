class Parser {
    void handle(String s) {
        check(s);
        parse(s);
    }
}
