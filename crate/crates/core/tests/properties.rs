//! Property tests for the algebraic invariants, one block per area.

use clap::Parser;
use proptest::prelude::*;
use rand::SeedableRng;

use interlace::check::graph_from_pair_mask;
use interlace::cli::{run, RunConfig};
use interlace::delta::adjacency_delta_matroid;
use interlace::euler::{euler_circuits, eulerian_system, martin};
use interlace::interlace::{
    global_recursive, global_statesum, q_matrix, q_matrix_recursive, q_nullity_recursive,
    q_nullity_statesum, q_nullity_via_twovar, q_twovar_recursive, q_twovar_statesum,
};
use interlace::isotropic::{
    default_presentation, from_four_regular, inconsistent_transitions, Labelling,
};
use interlace::plane::{oriented_medial, PlaneGraph};
use interlace::random::{random_four_regular, random_two_in_two_out};
use interlace::{Gf2Matrix, Graph};

fn graph(n: usize, edges: u64, loops: u64) -> Graph {
    let mut g = graph_from_pair_mask(n, edges);
    for v in 0..n {
        if loops >> v & 1 == 1 {
            g.add_edge(v, v);
        }
    }
    g
}

fn simple_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, any::<u64>()).prop_map(|(n, e)| graph(n, e, 0))
}

fn looped_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, any::<u64>(), any::<u64>()).prop_map(|(n, e, l)| graph(n, e, l))
}

fn symmetric(max_n: usize) -> impl Strategy<Value = Gf2Matrix> {
    looped_graph(max_n).prop_map(|g| g.adjacency_matrix())
}

fn indices(mask: u64, n: usize) -> Vec<usize> {
    (0..n).filter(|&i| mask >> i & 1 == 1).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn rank_plus_nullity_is_size(g in looped_graph(10), t in any::<u64>()) {
        let t = t & g.vertex_mask();
        prop_assert_eq!(g.rank_of(t) + g.nullity_of(t), t.count_ones() as usize);
    }

    #[test]
    fn pivot_transform_is_an_involution(a in symmetric(8), t in any::<u64>()) {
        let idx = indices(t, a.dim());
        prop_assume!(a.is_invertible_on(&idx));
        let once = a.pivot_on(&idx).unwrap();
        prop_assert_eq!(once.pivot_on(&idx).unwrap(), a);
    }

    #[test]
    fn pivot_transform_is_a_partial_inverse(a in symmetric(8), t in any::<u64>(), x in any::<u64>()) {
        let n = a.dim();
        let idx = indices(t, n);
        prop_assume!(a.is_invertible_on(&idx));
        let xv: Vec<bool> = (0..n).map(|i| x >> i & 1 == 1).collect();
        let yv = a.mul_vec(&xv);
        let in_t = |i: usize| t >> i & 1 == 1;
        let u: Vec<bool> = (0..n).map(|i| if in_t(i) { yv[i] } else { xv[i] }).collect();
        let v: Vec<bool> = (0..n).map(|i| if in_t(i) { xv[i] } else { yv[i] }).collect();
        prop_assert_eq!(a.pivot_on(&idx).unwrap().mul_vec(&u), v);
    }

    #[test]
    fn edge_pivot_matches_matrix_transform(g in simple_graph(8), pick in any::<usize>()) {
        let edges = g.edges();
        prop_assume!(!edges.is_empty());
        let (a, b) = edges[pick % edges.len()];
        let lhs = g.adjacency_matrix().pivot_on(&[a, b]).unwrap();
        let rhs = g.pivot_at(a, b).unwrap().adjacency_matrix().swap_indices(a, b);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn pivot_is_three_local_complements(g in simple_graph(6), pick in any::<usize>()) {
        let edges = g.edges();
        prop_assume!(!edges.is_empty());
        let (a, b) = edges[pick % edges.len()];
        let lhs = g.pivot_at(a, b).unwrap().swap_labels_at(a, b);
        let rhs = g.local_complement_at(a).local_complement_at(b).local_complement_at(a);
        prop_assert_eq!(lhs.adjacency_matrix(), rhs.adjacency_matrix());
    }

    #[test]
    fn complements_commute_with_deletion_elsewhere(g in looped_graph(7), v in any::<usize>(), w in any::<usize>()) {
        let n = g.n();
        prop_assume!(n >= 2);
        let v = g.label(v % n).to_string();
        let w = g.label(w % n).to_string();
        prop_assume!(v != w);
        let lc_then_del = g.local_complement(&v).unwrap().delete_vertex(&w).unwrap();
        let del_then_lc = g.delete_vertex(&w).unwrap().local_complement(&v).unwrap();
        prop_assert_eq!(lc_then_del, del_then_lc);
        let plus_then_del = g.loop_complement(&[&v]).unwrap().delete_vertex(&w).unwrap();
        let del_then_plus = g.delete_vertex(&w).unwrap().loop_complement(&[&v]).unwrap();
        prop_assert_eq!(plus_then_del, del_then_plus);
    }

    #[test]
    fn interlace_pipelines_agree(g in looped_graph(7)) {
        if g.is_simple() {
            prop_assert_eq!(q_nullity_recursive(&g).unwrap(), q_nullity_statesum(&g));
        }
        prop_assert_eq!(q_twovar_recursive(&g).unwrap(), q_twovar_statesum(&g));
        prop_assert_eq!(q_nullity_via_twovar(&g).unwrap(), q_nullity_statesum(&g));
    }

    #[test]
    fn global_pipelines_agree(g in simple_graph(7)) {
        prop_assert_eq!(global_recursive(&g).unwrap(), global_statesum(&g));
    }

    #[test]
    fn matrix_recursion_agrees(a in symmetric(7)) {
        prop_assert_eq!(q_matrix_recursive(&a).unwrap(), q_matrix(&a).unwrap());
    }

    #[test]
    fn martin_equals_interlace_of_any_circuit(seed in any::<u64>(), n in 1usize..=5) {
        let mut r = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let d = random_two_in_two_out(&mut r, n);
        let m = martin(&d).unwrap();
        let c = eulerian_system(&d).unwrap();
        prop_assert_eq!(&m, &q_nullity_statesum(&c.interlace_graph(d.graph())));
        if let Ok(all) = euler_circuits(&d) {
            prop_assert_eq!(m.eval_i64(1), (all.len() as i64).into());
        }
        let u = random_four_regular(&mut r, n);
        let c = eulerian_system(&u).unwrap();
        prop_assert_eq!(martin(&u).unwrap(), global_statesum(&c.interlace_graph(&u)));
    }

    #[test]
    fn medial_martin_is_tutte_diagonal(seed in any::<u64>(), n in 1usize..=5, m in 1usize..=7) {
        let mut r = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let pg = PlaneGraph::random(&mut r, n, m.max(n - 1).max(1));
        prop_assert_eq!(pg.tutte().diagonal(), martin(&oriented_medial(&pg).unwrap()).unwrap());
    }

    #[test]
    fn isotropic_polynomials_match(g in simple_graph(6)) {
        let s = default_presentation(&g).unwrap();
        let z = interlace::isotropic::KVector::constant(g.n(), interlace::isotropic::KElem::Z);
        prop_assert_eq!(s.restricted_tm(&z).unwrap(), q_nullity_statesum(&g));
        prop_assert_eq!(s.global_tm().unwrap(), global_statesum(&g));
    }

    #[test]
    fn isotropic_four_regular_matches_martin(seed in any::<u64>(), n in 1usize..=4) {
        let mut r = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let d = random_two_in_two_out(&mut r, n);
        let lambda = Labelling::standard(n);
        let s = from_four_regular(&d, &lambda).unwrap();
        let t = inconsistent_transitions(&d).unwrap();
        prop_assert_eq!(s.restricted_tm(&lambda.of_transitions(&t)).unwrap(), martin(&d).unwrap());
    }

    #[test]
    fn adjacency_delta_matroid_relations(g in looped_graph(7), x in any::<u64>()) {
        let m = adjacency_delta_matroid(&g);
        let n = g.n();
        prop_assert!(m.is_delta_matroid());
        prop_assert_eq!(m.q_delta().unwrap().shift(-1), q_nullity_statesum(&g));
        for (t, d) in m.all_distances().unwrap().into_iter().enumerate() {
            prop_assert_eq!(d as usize, g.nullity_of(t as u64));
        }
        let x = x & g.vertex_mask();
        prop_assert_eq!(adjacency_delta_matroid(&g.loop_complement_mask(x)), m.loop_complement(x));
        let idx = indices(x, n);
        if let Ok(p) = g.adjacency_matrix().pivot_on(&idx) {
            prop_assert_eq!(interlace::delta::matrix_delta_matroid(&p).unwrap(), m.twist(x));
        }
    }
}

#[test]
fn identical_config_gives_identical_output() {
    let args = [
        "interlace",
        "check",
        "all",
        "--seed",
        "11",
        "--trials",
        "4",
        "--max-n",
        "5",
    ];
    let a = run(&RunConfig::try_parse_from(args).unwrap()).unwrap();
    let b = run(&RunConfig::try_parse_from(args).unwrap()).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.code, 0, "{}", a.text);
}
