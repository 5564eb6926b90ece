interface I {
}
