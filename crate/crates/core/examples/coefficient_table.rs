//! Prints the coefficients {{k, j}}* for k <= 6, j <= 8, and checks that every
//! route to a single entry gives the same fraction.

use zetacoeffs::coeffs::{self, coefficient_table};

fn main() -> zetacoeffs::Result<()> {
    for (k, row) in coefficient_table(6, 8, false).iter().enumerate() {
        let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
        println!("k={k}: {}", cells.join("  "));
    }

    let (k, j) = (5, 4);
    let rec = coeffs::s2star_rec(k, j);
    println!("\n{{{{{k},{j}}}}}* = {rec}");
    println!("  closed sum        {}", coeffs::s2star_sum(k, j)?);
    println!("  harmonic form     {}", coeffs::s2star_harmonic(k, j)?);
    println!("  OGF extraction    {}", coeffs::s2star_ogf_coeff(k, j)?);
    println!("  heuristic         {}", coeffs::s2star_heuristic(k - 2, j)?);
    println!("  reverse binomial  {}", coeffs::s2star_reverse_binomial(k - 2, j)?);
    println!("  scaled            {}", coeffs::s2star_scaled(k, j));
    Ok(())
}
