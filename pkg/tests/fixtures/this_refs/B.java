class B extends A {
    int x;
}
