class c3 {
    private int base;

    public int root() {
        return base;
    }
}
