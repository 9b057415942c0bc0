// Running a seeded suite programmatically, as `okubic check` does.

use okubic::cli::suites::{run_suite, Suite, SuiteConfig};
use okubic::exactfield::F3;
use okubic::okubo::Flavor;

pub fn run_example() {
    let cfg = SuiteConfig { samples: 10, seed: 42, flavor: Flavor::Compact, q: F3::frac(1, 2) };
    let report = run_suite(Suite::Composition, &cfg).unwrap();
    for c in &report.checks {
        println!("{}: {}/{} failed", c.name, c.failed, c.runs);
    }
    assert!(report.passed);
}

#[allow(dead_code)]
fn main() {
    run_example();
}
