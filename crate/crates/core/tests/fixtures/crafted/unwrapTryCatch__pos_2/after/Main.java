class Decoder {
    Object decode(String s) {
        Object out = null;
        out = parse(s);
        return out;
    }
}
