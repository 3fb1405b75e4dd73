//! Li_s(z) by the coefficient series, the classic binomial series, and the
//! direct sum. The two transformed series reach past |z| = 1 on the left.

use zetacoeffs::exactnum::ComplexF;
use zetacoeffs::special::{li_classic_series, li_direct, li_new_series};

fn main() -> zetacoeffs::Result<()> {
    for (s, z) in [(2, -0.5), (2, 0.4), (3, -1.0), (4, -3.0)] {
        let new = li_new_series(s, z, 60)?;
        let classic = li_classic_series(s, z, 60)?;
        let direct = li_direct(s, z, 4000);
        let direct = if direct.outside_domain { "diverges".to_string() } else { direct.value.to_string() };
        println!("Li_{s}({z}): new {} classic {} direct {direct}", new.value, classic.value);
    }
    let i = ComplexF::new(0.0, 1.0);
    println!("Li_2(i) = {}", li_new_series(2, i, 80)?.value);
    Ok(())
}
