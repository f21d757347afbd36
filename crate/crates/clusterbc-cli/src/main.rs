fn main() {
    println!("clusterbc");
}
