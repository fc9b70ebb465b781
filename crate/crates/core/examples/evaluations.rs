//! Evaluations of q_N and Q at small integers against counting oracles,
//! and the structural coefficient identities.

use interlace::evaluations::{evaluation_report, structure_checks};
use interlace::Graph;

fn main() -> Result<(), interlace::Error> {
    let graphs = [
        ("C5", Graph::cycle(5)),
        ("K4", Graph::complete(4)),
        ("P3 + loop", Graph::from_edges(3, &[(0, 1), (1, 2), (2, 2)])),
    ];
    for (name, g) in &graphs {
        let report = evaluation_report(name, g)?;
        println!(
            "{name}: q_N at -1..3 = {:?}",
            report
                .q_values
                .iter()
                .map(|(_, v)| v.to_string())
                .collect::<Vec<_>>()
        );
        for c in &report.checks {
            println!(
                "  [{}] {}: {} vs {}",
                if c.pass { "ok" } else { "FAIL" },
                c.name,
                c.lhs,
                c.rhs
            );
        }
        if g.is_simple() {
            for c in structure_checks(g, Some(1 << 12))? {
                println!("  [{}] {}", if c.pass { "ok" } else { "FAIL" }, c.name);
            }
        }
    }
    Ok(())
}
