//! Isotropic systems over the Klein four-group: graphic presentations, the
//! construction from a 4-regular graph, and the Tutte-Martin polynomials.

use interlace::euler::{enumerate_transitions, martin};
use interlace::interlace::{global_statesum, q_nullity_statesum};
use interlace::isotropic::{
    default_presentation, from_four_regular, from_graphic_presentation, worked_example, KElem,
    KVector,
};
use interlace::Graph;

fn main() -> Result<(), interlace::Error> {
    let (g, lambda) = worked_example();
    let s = from_four_regular(&g, &lambda)?;
    let members: Vec<String> = s.members().iter().map(|v| v.render(2)).collect();
    println!(
        "one loop at each of two vertices, joined twice: L = {{{}}}",
        members.join(", ")
    );
    for (t, circuits) in enumerate_transitions(&g)? {
        let dim = s.dim_meet_hat(&lambda.of_transitions(&t))?;
        println!(
            "  transitions {:?}: {circuits} circuits, dim(L meet hat) = {dim}",
            t.choices()
        );
    }
    println!("  TM(S) = {}, M(G) = {}", s.global_tm()?, martin(&g)?);

    let p3 = Graph::path(3);
    let s = default_presentation(&p3)?;
    let z = KVector::constant(3, KElem::Z);
    println!(
        "P3 with A = x, B = y: tm(S, z) = {}, q_N = {}",
        s.restricted_tm(&z)?,
        q_nullity_statesum(&p3)
    );

    let a = KVector::from_elems(&[KElem::Y, KElem::Z, KElem::X]);
    let b = KVector::from_elems(&[KElem::X, KElem::X, KElem::Y]);
    let s = from_graphic_presentation(&p3, &a, &b)?;
    println!(
        "P3 with A = {}, B = {}: tm(S, A+B) = {}, TM(S) = {}, Q = {}",
        a.render(3),
        b.render(3),
        s.restricted_tm(&a.add(&b))?,
        s.global_tm()?,
        global_statesum(&p3)
    );
    Ok(())
}
