class c1 extends c2 {
    int x;
}
