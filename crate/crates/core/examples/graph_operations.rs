//! Local complementation, pivots, loop complements and label swaps.

use interlace::Graph;

fn main() -> Result<(), interlace::Error> {
    let g = Graph::path(4);
    println!("P4 edges: {:?}", g.edges());

    let lc = g.local_complement("1")?;
    println!("P4 * 1 edges: {:?}", lc.edges());

    let piv = g.pivot("1", "2")?;
    println!("P4^(12) edges: {:?}", piv.edges());
    let three = g
        .local_complement("1")?
        .local_complement("2")?
        .local_complement("1")?;
    assert_eq!(
        piv.swap_labels("1", "2")?.adjacency_matrix(),
        three.adjacency_matrix()
    );
    println!("P4^(12) with 1,2 swapped = P4*1*2*1");

    let looped = g.loop_complement(&["0", "3"])?;
    println!(
        "P4 + {{0,3}} loops: {:?}",
        (0..4).filter(|&v| looped.is_looped(v)).collect::<Vec<_>>()
    );
    println!(
        "pivot at a looped endpoint: {}",
        looped.pivot("0", "1").unwrap_err()
    );

    for (name, h) in [
        ("P4", Graph::path(4)),
        ("C5", Graph::cycle(5)),
        ("K4", Graph::complete(4)),
    ] {
        let s = h.stats(1 << 12)?;
        println!(
            "{name}: components {}, alpha {}, pivot orbit size {}, max alpha over orbit {}",
            s.components, s.independence_number, s.orbit_size, s.pivot_orbit_max_independence
        );
    }
    Ok(())
}
