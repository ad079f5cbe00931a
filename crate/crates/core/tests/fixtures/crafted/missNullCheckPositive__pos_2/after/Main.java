class Greeting {
    String greet(String name) {
        if (name == null) {
            name = "default";
        }
        String text = "Hello " + name;
        return text;
    }
}
