class c3 {
    int x;
}
