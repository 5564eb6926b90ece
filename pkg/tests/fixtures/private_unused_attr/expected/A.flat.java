class A {
    private int x;

    public void m() {
        return;
    }
}
