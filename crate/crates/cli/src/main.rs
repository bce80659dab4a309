fn main() { println!("angle-forge"); }
