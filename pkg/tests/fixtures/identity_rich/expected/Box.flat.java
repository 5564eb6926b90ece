public class Box {
    private int value;

    private boolean open;

    public Box() {
        value = 0;
    }

    public int peek() {
        return value;
    }

    public void put(int v) {
        if (!open)
            return;
        value = v;
    }
}
