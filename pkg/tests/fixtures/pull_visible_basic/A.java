class A {
    public int a;

    public void m() {
        a = 1;
    }
}
