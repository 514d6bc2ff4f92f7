//! The assignment route: cost matrices between private neighbors, the
//! optimal pairs they admit, and the resulting gap kappa - kappa0.

use graph_ricci::curvature::{curvature_gap, lly_cost_matrix, local_structure};
use graph_ricci::families::{cycle, dodecahedral, hypercube, petersen, torus_grid};
use graph_ricci::transport::{min_cost_assignment, optimal_pair_support};

fn main() -> graph_ricci::Result<()> {
    for (name, g) in [
        ("C_6", cycle(6)?),
        ("Q_3", hypercube(3)?),
        ("petersen", petersen()),
        ("dodecahedral", dodecahedral()),
        ("torus(6,6)", torus_grid(6, 6)?),
    ] {
        let (x, y) = g.edges().next().expect("graph has an edge");
        let costs = lly_cost_matrix(&g, x, y)?;
        let best = min_cost_assignment(&costs);
        let gap = curvature_gap(&g, x, y)?;
        let local = local_structure(&g, x, y)?;
        println!("{name} edge ({x},{y})");
        println!("  costs {costs:?}");
        println!("  optimal assignment {:?} of cost {}", best.permutation, best.cost);
        println!("  pairs in some optimum {:?}", optimal_pair_support(&costs));
        println!("  gap {} (largest optimal distance {:?})", gap.value, gap.supsup);
        println!("  case {:?}, pair counts {:?}", local.case, local.witness_counts);
    }
    Ok(())
}
