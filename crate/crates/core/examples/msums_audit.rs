//! The M sums: both definitions, the recurrence residual, and the
//! zeta(5) diagnostic.

use zetacoeffs::msums::{m_alt, m_def, m_recurrence_residual, zeta5_diagnostic, MSource, MSumSpec, StirlingReading};

fn main() -> zetacoeffs::Result<()> {
    println!("k d n   def(unsigned)  def(signed)  alt");
    for (k, d, n) in [(1, 1, 1), (3, 1, 1), (2, 2, 3), (4, 3, 2)] {
        let u = m_def(MSumSpec { k, d, n, reading: StirlingReading::Unsigned })?;
        let s = m_def(MSumSpec { k, d, n, reading: StirlingReading::Signed })?;
        println!("{k} {d} {n}   {u:<14} {s:<12} {}", m_alt(k, d, n)?);
    }
    for source in MSource::ALL {
        println!("residual(3,1,1) from {source:?}: {}", m_recurrence_residual(3, 1, 1, source)?);
    }
    for row in zeta5_diagnostic(&[1, 2, 4, 8], MSource::Alt)? {
        println!("n={} combination {} estimate {:.6}", row.n, row.combination, row.estimate);
    }
    Ok(())
}
