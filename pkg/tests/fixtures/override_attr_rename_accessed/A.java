class A {
    int x;

    public int getX() {
        return x;
    }
}
