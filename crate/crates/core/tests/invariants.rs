use num_complex::Complex64;
use proptest::prelude::*;

use pauli_geom::geometry::{
    build_pauli_graph, classify_hyperplane, dual_graph, dual_structure, enumerate_mcs, find_ovoids, perp_set, HyperplaneKind,
    PauliGraphBundle,
};
use pauli_geom::graph::{
    complete_graph, is_isomorphic, is_strongly_regular, max_cliques, maximum_independent_set, minimum_vertex_cover,
    petersen_graph, rook_graph, spectrum, verify_isomorphism, LabeledGraph,
};
use pauli_geom::pauli::{common_eigenbasis, make_operator, symplectic_product, SymplecticIndex, SystemParams};

fn bundle(p: u32, n: usize) -> PauliGraphBundle {
    build_pauli_graph(&SystemParams::new(p, n).unwrap()).unwrap()
}

fn index_strategy() -> impl Strategy<Value = (u32, usize, Vec<u32>, Vec<u32>)> {
    (prop_oneof![Just(2u32), Just(3), Just(5)], 1usize..=3).prop_flat_map(|(p, n)| {
        let coords = prop::collection::vec(0..p, 2 * n);
        (Just(p), Just(n), coords.clone(), coords)
    })
}

fn split(v: &[u32], n: usize, p: u32) -> SymplecticIndex {
    SymplecticIndex::new(v[..n].to_vec(), v[n..].to_vec(), p)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn commutation_matches_the_symplectic_form((p, n, u, v) in index_strategy()) {
        let params = SystemParams::new(p, n).unwrap();
        let (u, v) = (split(&u, n, p), split(&v, n, p));
        let (a, b) = (make_operator(&params, &u).unwrap(), make_operator(&params, &v).unwrap());
        prop_assert_eq!(a.commutes(&b).unwrap(), symplectic_product(&u, &v, p) == 0);
    }

    #[test]
    fn products_follow_index_addition((p, n, u, v) in index_strategy()) {
        let params = SystemParams::new(p, n).unwrap();
        let (u, v) = (split(&u, n, p), split(&v, n, p));
        let prod = make_operator(&params, &u).unwrap().multiply(&make_operator(&params, &v).unwrap()).unwrap();
        let sum = make_operator(&params, &u.add(&v, p)).unwrap();
        prop_assert!(prod.equal_up_to_phase(&sum).unwrap().is_some());
    }

    #[test]
    fn p_th_power_is_scalar((p, n, u, _v) in index_strategy()) {
        let params = SystemParams::new(p, n).unwrap();
        let a = make_operator(&params, &split(&u, n, p)).unwrap();
        let power = a.pow(p);
        let scalar = power.as_scalar();
        prop_assert!(scalar.is_some());
        if p == 2 {
            prop_assert!(scalar.unwrap().is_one());
        }
    }

    #[test]
    fn cover_and_independent_set_partition_vertices(edges in prop::collection::vec((0usize..12, 0usize..12), 0..40)) {
        let g = LabeledGraph::unlabeled(12, edges.into_iter().filter(|(a, b)| a != b));
        let mis = maximum_independent_set(&g).unwrap();
        let cover = minimum_vertex_cover(&g).unwrap();
        prop_assert!(g.is_independent(&mis.vertices));
        prop_assert!(g.edges().all(|(a, b)| cover.contains(&a) || cover.contains(&b)));
        let mut all: Vec<usize> = mis.vertices.iter().chain(&cover).copied().collect();
        all.sort_unstable();
        prop_assert_eq!(all, (0..12).collect::<Vec<_>>());
    }

    #[test]
    fn isomorphism_witness_preserves_adjacency(
        edges in prop::collection::vec((0usize..10, 0usize..10), 0..30),
        perm in Just((0..10).collect::<Vec<usize>>()).prop_shuffle(),
    ) {
        let g = LabeledGraph::unlabeled(10, edges.iter().copied().filter(|(a, b)| a != b));
        let h = LabeledGraph::unlabeled(10, edges.iter().filter(|(a, b)| a != b).map(|&(a, b)| (perm[a], perm[b])));
        let map = is_isomorphic(&g, &h).unwrap();
        prop_assert!(map.is_some());
        let map = map.unwrap();
        prop_assert!(verify_isomorphism(&g, &h, &map));
        for u in 0..10 {
            for v in 0..10 {
                prop_assert_eq!(g.is_adjacent(u, v), h.is_adjacent(map[u], map[v]));
            }
        }
    }

    #[test]
    fn eigenbasis_of_a_line_is_orthonormal_and_common(line_ix in 0usize..40, qubits in any::<bool>()) {
        let b = if qubits { bundle(2, 2) } else { bundle(3, 2) };
        let s = enumerate_mcs(&b).unwrap();
        let line = s.line(line_ix % s.line_count());
        let ops: Vec<_> = line.iter().map(|&v| b.operator(v).clone()).collect();
        let basis = common_eigenbasis(&ops).unwrap();
        let d = b.params().dim();
        prop_assert_eq!(basis.len(), d);
        for (i, e) in basis.iter().enumerate() {
            for (j, f) in basis.iter().enumerate() {
                let ip: Complex64 = e.dotc(f);
                let target = if i == j { 1.0 } else { 0.0 };
                prop_assert!((ip - Complex64::new(target, 0.0)).norm() < 1e-9);
            }
            for op in &ops {
                let image = op.apply(e.as_slice());
                // Eigenvalue from the largest component.
                let k = (0..d).max_by(|&x, &y| e[x].norm().total_cmp(&e[y].norm())).unwrap();
                let lambda = image[k] / e[k];
                prop_assert!((0..d).all(|x| (image[x] - lambda * e[x]).norm() < 1e-9));
            }
        }
    }
}

#[test]
fn exhaustive_commutation_for_small_systems() {
    for (p, n) in [(2, 1), (2, 2), (3, 1), (3, 2)] {
        let b = bundle(p, n);
        for u in 0..b.vertex_count() {
            for v in 0..b.vertex_count() {
                let form = symplectic_product(b.symplectic(u), b.symplectic(v), p) == 0;
                assert_eq!(b.operator(u).commutes(b.operator(v)).unwrap(), form);
            }
        }
    }
}

#[test]
fn spectral_traces() {
    let mut graphs = vec![bundle(2, 2).graph().clone(), bundle(3, 2).graph().clone(), petersen_graph()];
    let s = enumerate_mcs(&bundle(3, 2)).unwrap();
    graphs.push(dual_graph(&s));
    graphs.push(bundle(2, 3).graph().clone());
    for g in graphs {
        let sp = spectrum(&g).unwrap();
        assert_eq!(sp.trace(), 0);
        assert_eq!(sp.trace_of_square(), 2 * g.edge_count() as i64);
    }
}

#[test]
fn srg_eigenvalue_relations() {
    let s = enumerate_mcs(&bundle(3, 2)).unwrap();
    let graphs = [
        bundle(2, 2).graph().clone(),
        bundle(2, 3).graph().clone(),
        complete_graph(6).line_graph().complement(),
        petersen_graph(),
        rook_graph(3, 3),
        dual_graph(&s),
    ];
    for g in &graphs {
        let srg = is_strongly_regular(g).expect("strongly regular");
        let e = srg.eigen.expect("integral");
        let (d, lambda, mu) = (srg.degree as i64, srg.lambda as i64, srg.mu as i64);
        assert_eq!(e.r + e.l, lambda - mu);
        assert_eq!(e.r * e.l, mu - d);
        let sp = spectrum(g).unwrap();
        assert_eq!((sp.multiplicity(e.r) as u64, sp.multiplicity(e.l) as u64), (e.f, e.g));
    }
    assert_eq!(is_strongly_regular(&dual_graph(&s)).unwrap().quadruple(), (40, 12, 2, 4));
}

#[test]
fn cliques_of_pauli_graphs_commute() {
    for (p, n) in [(2, 2), (3, 2), (2, 3)] {
        let b = bundle(p, n);
        let size = b.params().dim() - 1;
        let cliques = max_cliques(b.graph(), size);
        assert!(!cliques.is_empty());
        for c in cliques {
            for (i, &u) in c.iter().enumerate() {
                for &v in &c[i + 1..] {
                    assert!(b.operator(u).commutes(b.operator(v)).unwrap());
                }
            }
        }
    }
}

#[test]
fn lines_are_closed_under_products() {
    for (p, n) in [(2, 1), (3, 1), (5, 1), (2, 2), (3, 2), (2, 3)] {
        let b = bundle(p, n);
        let s = enumerate_mcs(&b).unwrap();
        for line in s.lines() {
            for &u in line {
                for &v in line {
                    let prod = b.operator(u).multiply(b.operator(v)).unwrap();
                    let ok = prod.as_scalar().is_some() || b.identify(&prod).is_some_and(|(w, _)| line.contains(&w));
                    assert!(ok, "({p}, {n}): {} {}", b.label(u), b.label(v));
                }
            }
        }
    }
}

#[test]
fn perp_sets_and_ovoids_are_hyperplanes() {
    // W(2) and the qutrit dual, both generalized quadrangles.
    let w2 = enumerate_mcs(&bundle(2, 2)).unwrap();
    let q33 = dual_structure(&enumerate_mcs(&bundle(3, 2)).unwrap());
    for s in [w2, q33] {
        for x in 0..s.point_count() {
            let c = classify_hyperplane(&s, &perp_set(&s, x).unwrap());
            assert_eq!((c.kind, c.reference), (HyperplaneKind::PerpSet, Some(x)));
        }
        for o in find_ovoids(&s, Some(50)) {
            assert_eq!(classify_hyperplane(&s, &o).kind, HyperplaneKind::Ovoid);
        }
    }
}

#[test]
fn dual_graph_is_symmetric_and_12_regular() {
    let w = dual_graph(&enumerate_mcs(&bundle(3, 2)).unwrap());
    for u in 0..w.vertex_count() {
        assert_eq!(w.degree(u), 12);
        for v in 0..w.vertex_count() {
            assert_eq!(w.is_adjacent(u, v), w.is_adjacent(v, u));
        }
    }
}
