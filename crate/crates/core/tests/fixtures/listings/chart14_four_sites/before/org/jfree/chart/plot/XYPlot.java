public class XYPlot extends Plot {
    public boolean removeDomainMarker(int index, Marker marker, Layer layer, boolean notify) {
        ArrayList markers = this.getDomainMarkers(index, layer);
        boolean removed = markers.remove(marker);
        if (removed && notify) {
            this.fireChangeEvent();
        }
        return removed;
    }
    public boolean removeRangeMarker(int index, Marker marker, Layer layer, boolean notify) {
        ArrayList markers = this.getRangeMarkers(index, layer);
        boolean removed = markers.remove(marker);
        if (removed && notify) {
            this.fireChangeEvent();
        }
        return removed;
    }
    public boolean removeForegroundDomainMarker(int index, Marker marker, Layer layer, boolean notify) {
        ArrayList markers = this.getForegroundDomainMarkers(index, layer);
        boolean removed = markers.remove(marker);
        if (removed && notify) {
            this.fireChangeEvent();
        }
        return removed;
    }
    public boolean removeBackgroundRangeMarker(int index, Marker marker, Layer layer, boolean notify) {
        ArrayList markers = this.getBackgroundRangeMarkers(index, layer);
        boolean removed = markers.remove(marker);
        if (removed && notify) {
            this.fireChangeEvent();
        }
        return removed;
    }
}
