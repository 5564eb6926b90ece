class G<T> {
}
