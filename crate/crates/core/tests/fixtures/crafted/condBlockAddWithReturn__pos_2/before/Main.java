class Table {
    Object[] rows;
    Object row(int index) {
        Object r = rows[index];
        return r;
    }
}
