class Greeter {
    String greet() {
        return "hi";
    }
}
