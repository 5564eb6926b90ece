class A {
    private int x = 3;

    public int y = x + 1;
}
