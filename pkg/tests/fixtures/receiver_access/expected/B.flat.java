class B {
    public int use(A a) {
        a.v = 1;
        return a.twice();
    }

    public A make() {
        return new A();
    }
}
