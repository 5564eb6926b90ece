class B {
    public void m() {
        int x;
        x = 7;
        this.x = 5;
    }

    public int x;
}
