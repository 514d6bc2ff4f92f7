//! Writing and reading graph6 and edge lists, plus format detection.

use graph_ricci::families::{
    detect_format, icosidodecahedron, parse_edge_list, parse_graph6, read_graph, write_edge_list,
    write_graph6,
};

fn main() -> graph_ricci::Result<()> {
    let g = icosidodecahedron();
    let g6 = write_graph6(&g)?;
    println!("graph6: {g6}");
    assert_eq!(parse_graph6(&g6)?, g);

    let edges = write_edge_list(&g);
    println!("edge list starts:\n{}", edges.lines().take(4).collect::<Vec<_>>().join("\n"));
    assert_eq!(parse_edge_list(&edges)?, g);

    println!("detected {:?} and {:?}", detect_format(&g6), detect_format(&edges));
    let k4 = read_graph("C~\n", None)?;
    println!("C~ is a graph on {} vertices with {} edges", k4.n(), k4.edge_count());

    match parse_edge_list("n 3\n0 1\n1 1\n") {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
