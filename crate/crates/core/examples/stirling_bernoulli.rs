//! Stirling numbers of both kinds, Bernoulli numbers, Faulhaber sums.

use zetacoeffs::stirling::{bernoulli_number, faulhaber_sum, stirling1_signed, stirling2};

fn main() {
    for n in 0..=6 {
        let s2: Vec<String> = (0..=n).map(|k| stirling2(n, k).to_string()).collect();
        let s1: Vec<String> = (0..=n).map(|k| stirling1_signed(n, k).to_string()).collect();
        println!("n={n}  S2: {:<24} s1: {}", s2.join(" "), s1.join(" "));
    }
    let bs: Vec<String> = (0..=12).map(|n| bernoulli_number(n).to_string()).collect();
    println!("B_0..B_12: {}", bs.join(", "));
    println!("1^5 + ... + 100^5 = {}", faulhaber_sum(5, 100));
}
