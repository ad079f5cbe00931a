class Greeting {
    String greet(String name) {
        String text = "Hello " + name;
        return text;
    }
}
