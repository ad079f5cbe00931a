class Order {
    void place() {
        validate();
        reserve(1);
        charge();
        ship();
    }
}
