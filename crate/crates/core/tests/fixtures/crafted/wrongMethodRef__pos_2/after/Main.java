class Extremes {
    int computeMin(int[] a) {
        return a[0];
    }
    int computeMax(int[] a) {
        return a[1];
    }
    int report(int[] a) {
        int v = computeMax(a);
        return v;
    }
}
