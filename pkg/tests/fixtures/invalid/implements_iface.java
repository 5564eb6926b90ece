class C implements I {
}
