class A {
    static int count;

    public static void bump() {
        A.count = A.count + 1;
    }
}
