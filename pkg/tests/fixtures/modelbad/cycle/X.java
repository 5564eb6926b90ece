class X extends Y {
}
