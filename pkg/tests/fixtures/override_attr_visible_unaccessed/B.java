class B extends A {
    public int x;

    public void m() {
        super.x = 1;
    }
}
