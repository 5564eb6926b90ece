class B {
    static int count;

    public static void bump() {
        count = count + 1;
    }
}
