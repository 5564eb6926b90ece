class B {
    public void m() {
        return;
    }
}
