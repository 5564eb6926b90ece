class c1 {
    int x;

    int x$c2;

    int x$c3;
}
