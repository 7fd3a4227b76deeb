use magicsets::bound::{brute_force_bound, hypergraph_bound, noncontextual_bound};
use magicsets::dataset::{self, DatasetEntry};
use magicsets::gf2::{BitVec, DEFAULT_COSET_CAP};
use magicsets::gram::{is_magic_gram, is_reduced, magic_affine_space, min_qubits, DEFAULT_ENUMERATION_CAP};
use magicsets::hypergraph::Hypergraph;
use magicsets::reduce::{apply_recipe, reduce_with};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn entries(max_vertices: usize) -> Vec<DatasetEntry> {
    dataset::all()
        .unwrap()
        .into_iter()
        .filter(|e| e.hypergraph.vertex_count() <= max_vertices)
        .collect()
}

/// Random vertex relabeling and edge reordering; returns the new hypergraph and the edge order.
fn shuffled(h: &Hypergraph, rng: &mut ChaCha8Rng) -> (Hypergraph, Vec<usize>) {
    let mut map: Vec<usize> = (0..h.vertex_count()).collect();
    map.shuffle(rng);
    let mut order: Vec<usize> = (0..h.edge_count()).collect();
    order.shuffle(rng);
    let edges = order
        .iter()
        .map(|&i| {
            let mut e: Vec<usize> = h.edge(i).iter().map(|&v| map[v]).collect();
            e.shuffle(rng);
            e
        })
        .collect();
    (Hypergraph::new(h.vertex_count(), edges).unwrap(), order)
}

fn random_bits(len: usize, rng: &mut ChaCha8Rng) -> BitVec {
    let bits: Vec<bool> = (0..len).map(|_| rng.gen()).collect();
    BitVec::from_bools(&bits)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn relabeling_preserves_invariants(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for e in entries(27) {
            let h = &e.hypergraph;
            let (g, _) = shuffled(h, &mut rng);
            prop_assert!(h.is_isomorphic(&g));
            prop_assert_eq!(h.invariant_hash(), g.invariant_hash());
            let a = magic_affine_space(h).unwrap().unwrap();
            let b = magic_affine_space(&g).unwrap().unwrap();
            prop_assert_eq!(a.dimension(), b.dimension());
            let qa = min_qubits(h, DEFAULT_ENUMERATION_CAP).unwrap();
            let qb = min_qubits(&g, DEFAULT_ENUMERATION_CAP).unwrap();
            prop_assert_eq!(qa.qubits, qb.qubits);
            if h.vertex_count() <= 10 {
                let ba = hypergraph_bound(h, false, DEFAULT_COSET_CAP).unwrap();
                let bb = hypergraph_bound(&g, false, DEFAULT_COSET_CAP).unwrap();
                prop_assert_eq!(ba.report.b, bb.report.b);
            }
        }
    }

    #[test]
    fn signed_bound_follows_edge_order(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for e in entries(10) {
            let h = &e.hypergraph;
            let (g, order) = shuffled(h, &mut rng);
            let signs = random_bits(h.edge_count(), &mut rng);
            let permuted = BitVec::from_bools(&order.iter().map(|&i| signs.get(i)).collect::<Vec<_>>());
            let direct = noncontextual_bound(h, &signs).unwrap();
            let moved = noncontextual_bound(&g, &permuted).unwrap();
            prop_assert_eq!(direct.b, moved.b);
            prop_assert_eq!(direct.b, brute_force_bound(&g, &permuted).unwrap().b);
        }
    }

    #[test]
    fn reduction_outputs_stay_magic(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for e in dataset::all().unwrap() {
            let h = &e.hypergraph;
            let space = magic_affine_space(h).unwrap().unwrap();
            let coefficients = random_bits(space.dimension(), &mut rng);
            let g = space.space().to_matrix(&space.element(&coefficients));
            if is_reduced(&g) {
                continue;
            }
            let trace = reduce_with(h, &g).unwrap();
            let out = &trace.output;
            prop_assert!(out.is_proper_eulerian().0);
            prop_assert!(out.vertex_count() <= h.vertex_count());
            prop_assert!(out.edge_count() <= h.edge_count());
            prop_assert!(is_magic_gram(out, &trace.reduced_gram).unwrap());
            prop_assert!(magic_affine_space(out).unwrap().is_some());
            let replayed = apply_recipe(h, &trace.recipe).unwrap();
            prop_assert_eq!(replayed.canonical_edges(), out.canonical_edges());
        }
    }
}
