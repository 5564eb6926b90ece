class B {
    public int a;

    public void m() {
        a = 1;
    }
}
