class B {
    private int x;

    public int getX() {
        return x;
    }

    public void setX(int v) {
        x = v;
    }
}
