class c2 {
    int mid;

    public int twice() {
        return root() + root();
    }

    private int base;

    public int root() {
        return base;
    }
}
