//! Runs every suite and prints a status count per identity, plus any failures.

use std::collections::BTreeMap;
use std::time::Instant;

use zetacoeffs::audit::{run_suite, Overrides, Status, SUITES};

fn main() -> zetacoeffs::Result<()> {
    for suite in SUITES {
        let start = Instant::now();
        let reports = run_suite(suite, &Overrides::new())?;
        let mut counts: BTreeMap<&str, (usize, usize)> = BTreeMap::new();
        for r in &reports {
            let e = counts.entry(r.id.as_str()).or_default();
            if r.status == Status::Fail { e.1 += 1 } else { e.0 += 1 }
        }
        println!("{suite}: {} checks in {:.2?}", reports.len(), start.elapsed());
        for (id, (pass, fail)) in counts {
            println!("  {id:<40} pass {pass:>5}  fail {fail:>5}");
        }
        for r in reports.iter().filter(|r| r.status == Status::Fail && r.gating()).take(5) {
            println!("  FAIL {} [{}] residual {} witness {:?}", r.id, r.params, r.residual, r.witness);
        }
    }
    Ok(())
}
