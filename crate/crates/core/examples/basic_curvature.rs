//! Curvature of a few classic graphs, edge by edge.

use graph_ricci::curvature::{curvature_profile, kappa_lly, kappa_zero};
use graph_ricci::families::{complete, cycle, hypercube, petersen};

fn main() -> graph_ricci::Result<()> {
    for (name, g) in [
        ("K_4", complete(4)?),
        ("C_5", cycle(5)?),
        ("C_6", cycle(6)?),
        ("Q_3", hypercube(3)?),
        ("petersen", petersen()),
    ] {
        let (x, y) = g.edges().next().expect("graph has an edge");
        println!(
            "{name:>9}: kappa = {:>5}  kappa0 = {:>5}",
            kappa_lly(&g, x, y)?,
            kappa_zero(&g, x, y)?
        );
    }

    let profile = curvature_profile(&petersen())?;
    println!("\npetersen profile ({} edges):", profile.records.len());
    for r in profile.records.iter().take(3) {
        println!("  {}", serde_json::to_string(r).expect("serializable"));
    }
    Ok(())
}
