class SmallCircle {
    public double area() {
        return area$Circle() / 2.0;
    }

    private double r;

    public double area$Circle() {
        return scaled(r) * r;
    }

    public void setR(double v) {
        r = v;
    }

    private double scaled(double x) {
        return 3.14 * x;
    }

    private String name;

    public String getName() {
        return name;
    }

    public void setName(String n) {
        name = n;
    }
}
