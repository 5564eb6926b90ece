class A {
    int p;

    protected int q;

    void g() {
        p = 2;
    }

    protected void f() {
        q = 3;
    }
}
