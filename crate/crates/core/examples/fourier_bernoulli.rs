//! Periodic Bernoulli functions from their Fourier series and the log forms.

use zetacoeffs::special::{bernoulli_closed_logforms, bernoulli_fourier, periodic_bernoulli_exact, Reading};

fn main() -> zetacoeffs::Result<()> {
    // the series converges for {x} in (1/6, 5/6)
    for order in 1..=4 {
        for x in [0.25, 0.5, 0.7] {
            let exact = periodic_bernoulli_exact(order, x)?;
            let series = bernoulli_fourier(order, x, 400)?.value;
            println!("B_{order}({x})/{order}!: polynomial {exact:+.12} series {series}");
        }
    }
    for order in 1..=2 {
        let x = 0.1;
        let closed = bernoulli_closed_logforms(order, x, Reading::Corrected)?;
        println!("B_{order}({x})/{order}! by logarithms: {closed}, polynomial {:+.12}", periodic_bernoulli_exact(order, x)?);
    }
    Ok(())
}
