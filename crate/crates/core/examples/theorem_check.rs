//! Runs every verification suite and prints a one-line summary per suite.
//!
//! ```text
//! cargo run --release --example theorem_check -- 5
//! ```

use graph_ricci::verify::{run_suite, SuiteOptions};

fn main() -> graph_ricci::Result<()> {
    let n_max = std::env::args()
        .nth(1)
        .map(|a| a.parse().expect("order bound"))
        .unwrap_or(5);
    let opts = SuiteOptions { n_max, ..SuiteOptions::default() };
    let reports = run_suite("all", &opts)?;
    for r in &reports {
        print!("{r}");
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    println!("{} suites, {failed} failed", reports.len());
    Ok(())
}
