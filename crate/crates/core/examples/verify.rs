//! Runs every identity check at the default bounds and at custom ones.

use std::time::Instant;

use lahbell::verify::{run, Bounds, Suite};

fn main() {
    for (suite, bounds) in [
        (Suite::All, Bounds::default()),
        (
            Suite::Theorem1,
            Bounds {
                n_max: 40,
                r_max: 0,
            },
        ),
        (
            Suite::Corollary6,
            Bounds {
                n_max: 14,
                r_max: 4,
            },
        ),
    ] {
        let start = Instant::now();
        let v = run(suite, bounds);
        println!(
            "suite {suite} (n_max={}, r_max={}):",
            bounds.n_max, bounds.r_max
        );
        for o in &v.outcomes {
            let status = if o.passed { "ok" } else { "FAIL" };
            println!(
                "  {status:4} {:>5} cases  {} [{}]",
                o.cases, o.identity, o.bound
            );
        }
        println!(
            "  {} in {:.2?}",
            if v.passed { "passed" } else { "FAILED" },
            start.elapsed()
        );
    }
}
