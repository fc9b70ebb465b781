//! Set systems, twists and loop complements, adjacency delta-matroids, and
//! their interlace polynomials.

use interlace::delta::{adjacency_delta_matroid, SetSystem};
use interlace::interlace::{global_statesum, q_nullity_statesum};
use interlace::matroid::{tutte_matroid, uniform};
use interlace::Graph;

fn main() -> Result<(), interlace::Error> {
    let m = SetSystem::from_words("abc", &["abc", "ab", "ac", "bc", "b", "c", ""])?;
    println!("M = {m}, delta-matroid: {}", m.is_delta_matroid());
    let ma = m.loop_complement_at(m.index_of("a")?);
    println!("M + a = {ma}, delta-matroid: {}", ma.is_delta_matroid());
    println!("vf-safety of M: {}", m.vf_safety()?);

    let g = Graph::from_edges(3, &[(0, 1), (1, 2), (2, 2)]);
    let mg = adjacency_delta_matroid(&g);
    println!("M_G for P3 with a loop = {mg}");
    println!(
        "  q_Delta(M_G; x-1) = {}, q_N(G) = {}",
        mg.q_delta()?.shift(-1),
        q_nullity_statesum(&g)
    );
    println!(
        "  Q_Delta(M_G; x-2) = {}, Q(G) = {}",
        mg.q_delta_global()?.shift(-2),
        global_statesum(&g)
    );
    println!("  qbar(M_G) = {}", mg.q_bar()?);
    println!("  distances d(X) for X = 0..8: {:?}", mg.all_distances()?);
    let tw = mg.twist(0b011);
    println!("  M_G * {{0,1}} = {tw}, binary: {}", tw.is_binary()?);

    let u = uniform(2, 4);
    let t = tutte_matroid(&u)?;
    println!("U_2,4: t = {t}");
    println!(
        "  t(x, x) = {}, q_Delta(x-1) = {}",
        t.diagonal(),
        u.q_delta()?.shift(-1)
    );
    Ok(())
}
