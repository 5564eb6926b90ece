class B extends A {
    public void h() {
        super.g();
    }
}
