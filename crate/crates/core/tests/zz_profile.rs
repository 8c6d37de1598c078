use gsp4local::whittaker::*;
use num_complex::Complex64;
use std::time::Instant;

fn c(re: f64, im: f64) -> Complex64 { Complex64::new(re, im) }

#[test]
#[ignore]
fn profile_mellin() {
    for (n, s1, s2) in [(0u32, c(1.0,0.0), c(-0.5,0.0)), (1, c(2.0,0.0), c(-1.0,0.0))] {
        let t0 = Instant::now();
        let (lhs, rhs) = h_mellin_check(n, s1, s2).unwrap();
        println!("mellin n={n}: {:?} rel {:.2e}", t0.elapsed(), (lhs-rhs).norm()/rhs.norm());
    }
}
