//! The vertex-nullity, global and two-variable interlace polynomials, each
//! computed by a state sum and by a recursion.

use interlace::interlace::{
    global_recursive, global_statesum, q_matrix, q_nullity_recursive, q_nullity_statesum,
    q_nullity_via_twovar, q_twovar_recursive, q_twovar_statesum,
};
use interlace::io::{format_poly1, format_poly2};
use interlace::Graph;

fn main() -> Result<(), interlace::Error> {
    let graphs = [
        ("E3", Graph::empty(3)),
        ("K2", Graph::complete(2)),
        ("P3", Graph::path(3)),
        ("K3", Graph::complete(3)),
        ("C4", Graph::cycle(4)),
        ("C5", Graph::cycle(5)),
    ];
    for (name, g) in &graphs {
        let q = q_nullity_statesum(g);
        assert_eq!(q, q_nullity_recursive(g)?);
        let big_q = global_statesum(g);
        assert_eq!(big_q, global_recursive(g)?);
        println!("{name}: q_N = {q}   Q = {big_q}");
    }

    let k2 = Graph::complete(2);
    let q2 = q_twovar_statesum(&k2);
    assert_eq!(q2, q_twovar_recursive(&k2)?);
    println!("q(K2; x, y) = {q2}");
    println!("{}", format_poly2(&q2));

    // Loops enter through the diagonal of the adjacency matrix.
    let looped = Graph::from_edges(2, &[(0, 1), (0, 0)]);
    let q = q_nullity_via_twovar(&looped)?;
    assert_eq!(q, q_nullity_statesum(&looped));
    assert_eq!(q, q_matrix(&looped.adjacency_matrix())?);
    println!("K2 with one loop: q_N = {q}  ({})", format_poly1(&q));
    Ok(())
}
