package p1;

class A {
    int shared;
}
