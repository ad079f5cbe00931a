class Plot {
    boolean removeMarker(int index, Marker marker) {
        ArrayList markers = this.getMarkers(index);
        boolean removed = markers.remove(marker);
        return removed;
    }
}
