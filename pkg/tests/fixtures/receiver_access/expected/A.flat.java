class A {
    public int v;

    public int twice() {
        return v + v;
    }
}
