class B extends A {
    public void m() {
        int x;
        x = 7;
        super.x = 5;
    }
}
