package p2;

class B extends A {
}
