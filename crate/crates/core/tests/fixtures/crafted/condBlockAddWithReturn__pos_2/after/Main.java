class Table {
    Object[] rows;
    Object row(int index) {
        if (index < 0) {
            return null;
        }
        Object r = rows[index];
        return r;
    }
}
