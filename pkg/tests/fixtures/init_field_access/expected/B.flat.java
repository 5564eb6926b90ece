class B {
    private int x = 3;

    public int y = x + 1;
}
