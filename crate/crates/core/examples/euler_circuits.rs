//! Eulerian circuits of 4-regular hosts, their interlace graphs, and the
//! Martin polynomials.

use interlace::euler::{
    classify, cohn_lempel_check, enumerate_transitions, euler_circuits, eulerian_system, martin,
    transposition_closure, FourRegularGraph, TwoInTwoOutDigraph,
};
use interlace::interlace::{global_statesum, q_nullity_statesum};

fn main() -> Result<(), interlace::Error> {
    // Two vertices joined by two arcs each way; both circuits read abab.
    let d = TwoInTwoOutDigraph::from_arcs(2, &[(0, 1), (1, 0), (0, 1), (1, 0)])?;
    let m = martin(&d)?;
    let circuits = euler_circuits(&d)?;
    println!("m(D) = {m}, {} Eulerian circuits", circuits.len());
    for c in &circuits {
        let h = c.interlace_graph(d.graph());
        println!(
            "  word {:?}: H(C) edges {:?}, q_N(H(C)) = {}",
            c.words()[0],
            h.edges(),
            q_nullity_statesum(&h)
        );
        assert_eq!(q_nullity_statesum(&h), m);
    }
    let closure = transposition_closure(d.graph(), &circuits[0], 1 << 10)?;
    println!(
        "transposition closure of the first circuit: {} circuits",
        closure.len()
    );

    // Undirected: K3 with every edge doubled.
    let g = FourRegularGraph::from_edges(3, &[(0, 1), (0, 1), (1, 2), (1, 2), (2, 0), (2, 0)])?;
    let c = eulerian_system(&g)?;
    let h = c.interlace_graph(&g);
    println!("M(G) = {}, Q(H(C)) = {}", martin(&g)?, global_statesum(&h));
    let mut agree = 0;
    let systems = enumerate_transitions(&g)?;
    for (p, _) in &systems {
        let (lhs, rhs) = cohn_lempel_check(&g, &c, p)?;
        agree += usize::from(lhs == rhs);
    }
    let (p, k) = &systems[systems.len() - 1];
    let cls = classify(&g, &c, p);
    println!(
        "last system: {k} circuits, agree {:#b} consistent {:#b} inconsistent {:#b}",
        cls.agree, cls.consistent, cls.inconsistent
    );
    println!(
        "circuit-partition rank formula holds for {agree}/{} transition systems",
        systems.len()
    );
    Ok(())
}
