class L {
    int x = #3;
}
