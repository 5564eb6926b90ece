class F {
    void f() {
        for (;;) {
        }
    }
}
