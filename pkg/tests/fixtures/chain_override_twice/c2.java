class c2 extends c3 {
    int x;
}
