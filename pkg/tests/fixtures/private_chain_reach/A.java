class A {
    private int x;

    private int dead;

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
