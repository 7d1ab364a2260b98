fn main() {
    println!("erfc(1/sqrt2)  = {:.17}", libm::erfc(1.0 / 2.0_f64.sqrt()));
    println!("erfc(0.353553) = {:.17}", libm::erfc(1.0 / (2.0 * 2.0_f64.sqrt())));
    println!("erf(1)         = {:.17}", libm::erf(1.0));
}
