class B {
    private int x;

    public void f() {
        g();
    }

    private void g() {
        h();
        x = 1;
    }

    private void h() {
    }
}
