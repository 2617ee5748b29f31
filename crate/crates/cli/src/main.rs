fn main() {
    println!("ctstyleseg");
}
