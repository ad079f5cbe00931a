class Lookup {
    Object find(Map map, String key) {
        if (key.isEmpty()) {
            return null;
        }
        Object v = map.get(key);
        return v;
    }
}
