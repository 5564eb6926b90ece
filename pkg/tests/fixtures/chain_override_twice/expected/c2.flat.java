class c2 {
    int x;

    int x$c3;
}
