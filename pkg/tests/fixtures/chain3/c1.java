class c1 extends c2 {
    public int all() {
        return twice() + mid;
    }
}
