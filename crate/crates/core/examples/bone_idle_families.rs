//! Families whose every edge has zero curvature at every idleness, next to
//! some that fall short.

use graph_ricci::curvature::{is_bone_idle, is_ricci_flat, is_zero_ricci_flat};
use graph_ricci::families::FamilySpec::{self, *};

fn main() -> graph_ricci::Result<()> {
    let specs: [FamilySpec; 10] = [
        Icosidodecahedron,
        BiAntiprism(7),
        TorusGrid(6, 8),
        TwistedTorus(7, 5, 2),
        KleinBottle(6, 6),
        Cycle(9),
        Cycle(5),
        Petersen,
        Hypercube(3),
        CompleteBipartite(3, 3),
    ];
    println!("{:<22} {:>9} {:>11} {:>16}", "graph", "bone-idle", "ricci-flat", "zero-ricci-flat");
    for spec in specs {
        let g = spec.build()?;
        println!(
            "{:<22} {:>9} {:>11} {:>16}",
            spec.to_string(),
            is_bone_idle(&g)?,
            is_ricci_flat(&g)?,
            is_zero_ricci_flat(&g)?
        );
    }
    Ok(())
}
