//! Exact Wasserstein-1 distances between lazy random-walk measures, with
//! the optimal plan split by distance and a brute-force cross-check.

use graph_ricci::families::cycle;
use graph_ricci::transport::{mu_alpha, optimal_plan, wasserstein1, wasserstein1_oracle};
use graph_ricci::Rational;

fn main() -> graph_ricci::Result<()> {
    let g = cycle(6)?;
    for alpha in [Rational::zero(), Rational::new(1, 3), Rational::new(1, 2)] {
        let mu = mu_alpha(&g, 0, &alpha)?;
        let nu = mu_alpha(&g, 1, &alpha)?;
        let plan = optimal_plan(&g, &mu, &nu)?;
        let by_distance: Vec<String> = plan.mass_by_distance().iter().map(ToString::to_string).collect();
        println!(
            "alpha {alpha}: W1 = {} (oracle {}), mass moved by distance [{}]",
            wasserstein1(&g, &mu, &nu)?,
            wasserstein1_oracle(&g, &mu, &nu)?,
            by_distance.join(", ")
        );
        for (from, to, d, m) in &plan.moves {
            println!("    {from} -> {to}  distance {d}  mass {m}");
        }
    }
    Ok(())
}
