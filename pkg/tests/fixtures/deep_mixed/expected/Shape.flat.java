class Shape {
    private String name;

    private int tag;

    private void log() {
    }

    public String getName() {
        return name;
    }

    public void setName(String n) {
        name = n;
    }
}
