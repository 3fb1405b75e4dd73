//! Harmonic numbers H_n^(r), and 1/n^k rebuilt from the coefficient table.

use zetacoeffs::harmonic::{harmonic, harmonic_real, harmonic_via_rec, npow_inverse};
use zetacoeffs::ExactRational;

fn main() {
    for n in 1..=6u64 {
        println!("H_{n} = {:<10} H_{n}^(2) = {}", harmonic(n, 1), harmonic(n, 2));
    }
    let n = 7;
    for k in 1..=4 {
        let direct = ExactRational::from(n as i64).pow(-k).expect("n > 0");
        println!("1/{n}^{k}: expansion {} direct {direct}", npow_inverse(n, k as usize));
    }
    println!("H_10^(3) via the coefficients: {}", harmonic_via_rec(10, 3));
    println!("H_10^(1.5) = {:.12}", harmonic_real(10, 1.5));
}
