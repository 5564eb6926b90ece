class A {
    public final int k = 1;

    public final void f() {
    }
}
