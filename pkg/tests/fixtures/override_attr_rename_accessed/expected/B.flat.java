class B {
    int x;

    int x$A;

    public int getX() {
        return x$A;
    }
}
