class Lookup {
    Object find(Map map, String key) {
        Object v = map.get(key);
        return v;
    }
}
