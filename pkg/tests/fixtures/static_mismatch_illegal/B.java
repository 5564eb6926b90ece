class B extends A {
    static int x;
}
