class B {
    int x;
}
