//! Curvature of Cartesian products: each edge carries its factor edge's
//! curvature scaled by that factor's share of the degree.

use graph_ricci::curvature::{kappa_lly, kappa_zero};
use graph_ricci::families::{complete, cycle, petersen};
use graph_ricci::Rational;

fn main() -> graph_ricci::Result<()> {
    for (name, g, h) in [
        ("petersen x C_6", petersen(), cycle(6)?),
        ("K_4 x K_4", complete(4)?, complete(4)?),
    ] {
        let p = g.cartesian_product(&h)?;
        let (dg, dh) = (g.degree(0) as i64, h.degree(0) as i64);
        let share = Rational::new(dg, dg + dh);
        let (a, b) = (g.neighbors(0)[0], 0);
        // the product edge (0, 0) ~ (a, 0) runs along the first factor
        let (u, v) = (0, a * h.n() + b);
        println!("{name}: {} vertices, {} edges", p.n(), p.edge_count());
        println!(
            "  first-factor edge: kappa {} = {} * {}, kappa0 {} = {} * {}",
            kappa_lly(&p, u, v)?,
            share,
            kappa_lly(&g, 0, a)?,
            kappa_zero(&p, u, v)?,
            share,
            kappa_zero(&g, 0, a)?
        );
    }
    Ok(())
}
