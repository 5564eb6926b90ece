class L {
    /* never closed
}
