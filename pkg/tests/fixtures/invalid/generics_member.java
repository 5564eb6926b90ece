class G {
    List<String> xs;
}
