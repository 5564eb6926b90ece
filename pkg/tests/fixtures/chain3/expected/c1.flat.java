class c1 {
    public int all() {
        return twice() + mid;
    }

    int mid;

    public int twice() {
        return root() + root();
    }

    private int base;

    public int root() {
        return base;
    }
}
