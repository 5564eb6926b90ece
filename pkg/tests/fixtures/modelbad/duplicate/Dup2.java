class Dup {
}
