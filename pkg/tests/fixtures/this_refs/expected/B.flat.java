class B {
    int x;

    private int x$A;

    public void set(int v) {
        this.x$A = v;
    }
}
