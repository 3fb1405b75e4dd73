//! Truncated generating functions (a)..(f) built from the coefficients,
//! compared with their plain definitions.

use zetacoeffs::series::{intro_example, IntroExample, IntroParams};

fn main() -> zetacoeffs::Result<()> {
    let (k, u) = (3, 6);
    let params = IntroParams::default();
    for id in IntroExample::ALL.into_iter().filter(|e| *e != IntroExample::G) {
        let out = intro_example(id, k, u, &params)?;
        let coeffs: Vec<String> = out
            .as_exact()
            .expect("exact for rational parameters")
            .coeffs()
            .iter()
            .map(|c| c.to_string())
            .collect();
        println!("({id}) k={k}: {}", coeffs.join(", "));
    }
    Ok(())
}
