class Order {
    void place() {
        validate();
        charge();
        ship();
        reserve(2);
    }
}
