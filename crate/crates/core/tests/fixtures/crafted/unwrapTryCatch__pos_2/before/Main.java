class Decoder {
    Object decode(String s) {
        Object out = null;
        try {
            out = parse(s);
        } catch (ParseException e) {
            out = fallback();
        }
        return out;
    }
}
