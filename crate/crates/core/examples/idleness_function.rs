//! The idleness function alpha -> kappa_alpha of single edges.

use graph_ricci::curvature::{idleness_function, kappa_alpha};
use graph_ricci::families::{complete, cycle, hypercube, star};
use graph_ricci::{Graph, Rational};

fn main() -> graph_ricci::Result<()> {
    for (name, g, (x, y)) in [
        ("K_2", complete(2)?, (0, 1)),
        ("C_6", cycle(6)?, (0, 1)),
        ("Q_3", hypercube(3)?, (0, 1)),
        ("star T_3", star(3)?, (0, 1)),
        // a triangle with a pendant vertex: degrees 3 and 2 give three pieces
        ("paw", Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2)])?, (0, 1)),
    ] {
        let f = idleness_function(&g, x, y)?;
        let points: Vec<String> = f
            .breakpoints()
            .iter()
            .map(|(a, v)| format!("({a}, {v})"))
            .collect();
        let slopes: Vec<String> = f.slopes().iter().map(ToString::to_string).collect();
        println!("{name}: breakpoints {}  slopes [{}]", points.join(" "), slopes.join(", "));
    }

    let g = hypercube(3)?;
    let third = Rational::new(1, 3);
    println!(
        "\nQ_3 at alpha = 1/3: kappa_alpha = {}",
        kappa_alpha(&g, 0, 1, &third)?
    );
    Ok(())
}
