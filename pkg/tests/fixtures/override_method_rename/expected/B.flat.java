class B {
    public void f() {
        f$A();
    }

    public void f$A() {
    }
}
