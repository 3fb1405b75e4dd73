//! The alternating zeta function through its different forms.

use zetacoeffs::special::{zeta_star, zeta_star_euler_form, zeta_star_harmonic_form, Reading, ZetaStarMethod};

fn main() -> zetacoeffs::Result<()> {
    for s in 1..=4 {
        let series = zeta_star(s, 60, ZetaStarMethod::Series)?;
        let closed = zeta_star(s, 60, ZetaStarMethod::Closed)?;
        let harm = zeta_star_harmonic_form(s, 60)?;
        println!("zeta*({s}) series {series:.15} closed {closed:.15} harmonic {harm:.15}");
    }
    for s in 3..=5 {
        println!(
            "Euler-sum form, s={s}: {:.6} (as printed {:.6})",
            zeta_star_euler_form(s, 2000, Reading::Corrected)?,
            zeta_star_euler_form(s, 2000, Reading::AsPrinted)?
        );
    }
    Ok(())
}
