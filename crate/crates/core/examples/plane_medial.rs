//! Plane graphs as rotation systems, their oriented medial graphs, and the
//! diagonal of the Tutte polynomial.

use interlace::euler::{euler_circuits, martin};
use interlace::interlace::q_nullity_statesum;
use interlace::plane::{oriented_medial, PlaneGraph};

fn main() -> Result<(), interlace::Error> {
    for (name, pg) in [
        ("C3", PlaneGraph::cycle(3)),
        ("theta", PlaneGraph::theta()),
        ("K4", PlaneGraph::k4()),
    ] {
        let t = pg.tutte();
        let diag = t.diagonal();
        let medial = oriented_medial(&pg)?;
        let m = martin(&medial)?;
        println!(
            "{name}: {} vertices, {} edges, {} faces",
            pg.n(),
            pg.edge_count(),
            pg.face_count()
        );
        println!("  t(x, y) = {t}");
        println!("  t(x, x) = {diag}, m(medial) = {m}");
        assert_eq!(diag, m);
        let circuits = euler_circuits(&medial)?;
        for c in &circuits {
            assert_eq!(q_nullity_statesum(&c.interlace_graph(medial.graph())), diag);
        }
        println!(
            "  q_N(H(C)) = t(x, x) for all {} Eulerian circuits of the medial",
            circuits.len()
        );
    }
    Ok(())
}
