class B {
    public void h() {
        g();
    }

    public void g() {
    }
}
