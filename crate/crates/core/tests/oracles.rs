use tppa_core::bratteli::{ihat, path_to_tableau, rhat, rook_tower, tableau_to_path};
use tppa_core::characters::{chi_star, tensor_by_ind_res, tensor_multiplicities};
use tppa_core::combinat::{
    bell, binomial, f_lambda, factorial, partitions_of, partitions_upto, standard_tableaux, stirling2, YoungDiagram,
};
use tppa_core::diagram::{compose, enumerate_monoid, MonoidKind, PartitionDiagram};
use tppa_core::rook::{enumerate_rook, RookElement};
use tppa_core::rsk::{path_to_spt, spt_to_path, standard_spts};
use tppa_core::scalar::rat;
use tppa_core::seminormal::RookIrrep;
use tppa_core::tensor::{schur_weyl_report, TensorSpace};
use tppa_core::{jm, Level};

fn yd(s: &str) -> YoungDiagram {
    s.parse().unwrap()
}

fn d(s: &str) -> PartitionDiagram {
    s.parse().unwrap()
}

#[test]
fn small_number_tables() {
    assert_eq!((0..8).map(bell).collect::<Vec<_>>(), vec![1, 1, 2, 5, 15, 52, 203, 877]);
    assert_eq!(stirling2(5, 2), 15);
    assert_eq!(stirling2(6, 3), 90);
    assert_eq!(binomial(6, 2), 15);
    assert_eq!(factorial(6), 720);
    assert_eq!(partitions_of(6).len(), 11);
    assert_eq!(f_lambda(&yd("(3,2,1)")), 16);
    assert_eq!(f_lambda(&yd("(4,2)")), 9);
    assert_eq!(yd("(4,2)").hook_formula(), 9);
}

#[test]
fn rook_monoid_orders() {
    // |R_n| = Σ_r C(n,r)² r!
    let sizes: Vec<usize> = (0..=5).map(|n| enumerate_rook(n).len()).collect();
    assert_eq!(sizes, vec![1, 2, 7, 34, 209, 1546]);
}

#[test]
fn diagram_monoid_orders() {
    let a: Vec<usize> = (1..=3)
        .map(|k| enumerate_monoid(MonoidKind::Partition, k).unwrap().len())
        .collect();
    assert_eq!(a, vec![2, 15, 203]);
    // Σ_r S(k,r)² r!
    let i: Vec<usize> = (1..=4)
        .map(|k| enumerate_monoid(MonoidKind::TotallyPropagating, k).unwrap().len())
        .collect();
    assert_eq!(i, vec![1, 3, 25, 339]);
    for k in 1..=3 {
        let half = enumerate_monoid(MonoidKind::HalfTotallyPropagating, k).unwrap();
        assert!(half.iter().all(|x| x.k() == k + 1 && x.is_totally_propagating()));
    }
}

#[test]
fn composition_counts_middle_components() {
    let e = d("[[1,2],[-1,-2]]");
    let (p, loops) = compose(&e, &e).unwrap();
    assert_eq!(p, e);
    assert_eq!(loops, 1);

    let id = PartitionDiagram::identity(3);
    let x = d("[[1,-2],[2,3,-1],[-3]]");
    assert_eq!(compose(&id, &x).unwrap(), (x.clone(), 0));
    assert_eq!(compose(&x, &id).unwrap(), (x, 0));
}

#[test]
fn composition_rejects_size_mismatch() {
    assert!(compose(&PartitionDiagram::identity(2), &PartitionDiagram::identity(3)).is_err());
}

#[test]
fn rook_irrep_dimensions() {
    for n in 1..=4 {
        let mut squares = 0;
        for l in partitions_upto(n) {
            let v = RookIrrep::new(&l, n).unwrap();
            assert_eq!(v.dim() as u128, binomial(n, l.size()) * f_lambda(&l), "{l} n={n}");
            squares += v.dim() * v.dim();
        }
        assert_eq!(squares, enumerate_rook(n).len());
    }
}

#[test]
fn character_at_identity_is_dimension() {
    for n in 1..=4 {
        let id = RookElement::identity(n);
        for l in partitions_upto(n) {
            let dim = RookIrrep::new(&l, n).unwrap().dim() as i64;
            assert_eq!(chi_star(&l, &id).unwrap(), rat(dim));
        }
    }
}

#[test]
fn character_matches_trace() {
    let n = 3;
    for l in partitions_upto(n) {
        let v = RookIrrep::new(&l, n).unwrap();
        for rho in enumerate_rook(n) {
            assert_eq!(v.character(&rho).unwrap(), chi_star(&l, &rho).unwrap(), "{l} at {rho}");
        }
    }
}

#[test]
fn tensor_decomposition_two_ways() {
    for n in 1..=4 {
        for k in 1..=3 {
            assert_eq!(
                tensor_multiplicities(n, k).unwrap(),
                tensor_by_ind_res(n, k).unwrap(),
                "n={n} k={k}"
            );
        }
    }
}

#[test]
fn graph_sizes() {
    let g = rook_tower(3);
    let counts: Vec<usize> = (0..=3).map(|m| g.vertex_count(Level::integer(m))).collect();
    assert_eq!(counts, vec![1, 2, 4, 7]);
    assert_eq!(g.edge_count(), 18);
    assert!(g.is_simple());

    let h = ihat(Level::integer(3));
    let counts: Vec<usize> = Level::integer(3).up_to().map(|t| h.vertex_count(t)).collect();
    assert_eq!(counts, vec![1, 1, 2, 3, 4, 6]);
    assert_eq!(h.edge_count(), 19);
    assert!(h.is_simple());

    assert_eq!(rhat(3, 3).edge_count(), 14);
}

#[test]
fn rook_tower_path_counts_are_dimensions() {
    let n = 4;
    let g = rook_tower(n);
    let empty = YoungDiagram::empty();
    for (l, c) in g
        .path_counts((Level::integer(0), &empty), Level::integer(n as u32))
        .unwrap()
    {
        assert_eq!(c, RookIrrep::new(&l, n).unwrap().dim() as u128, "{l}");
    }
}

#[test]
fn tableau_path_round_trip() {
    for l in partitions_upto(4) {
        for t in standard_tableaux(&l, 4).unwrap() {
            let p = tableau_to_path(&t);
            assert_eq!(path_to_tableau(&p).unwrap(), t);
        }
    }
}

#[test]
fn spt_counts_match_rhat_paths() {
    let n = 4;
    let one = yd("(1)");
    for k in 1..=4 {
        let g = rhat(n, k);
        for l in partitions_upto(k.min(n)).into_iter().filter(|l| !l.is_empty()) {
            let spts = standard_spts(&l, k).unwrap();
            assert_eq!(spts.len() as u128, stirling2(k, l.size()) * f_lambda(&l), "{l} k={k}");
            let paths = g
                .count_paths((Level::integer(1), &one), (Level::integer(k as u32), &l))
                .unwrap();
            assert_eq!(spts.len() as u128, paths);
            for t in spts {
                let p = spt_to_path(&t, k).unwrap();
                g.validate_path(&p).unwrap();
                assert_eq!(path_to_spt(&p).unwrap(), t);
            }
        }
    }
}

#[test]
fn schur_weyl_small_cases() {
    for (n, k, half) in [(2, 2, false), (3, 2, false), (3, 2, true), (2, 3, false)] {
        let r = schur_weyl_report(n, k, half).unwrap();
        assert!(r.ok, "{r:?}");
    }
}

#[test]
fn tensor_space_guard() {
    assert!(TensorSpace::new(3, 6, false).is_ok());
    assert!(TensorSpace::new(3, 7, false).is_err());
}

#[test]
fn jm_centrality_and_gt() {
    for t in [Level::integer(2), Level::half(2)] {
        assert!(jm::verify_centrality(t).unwrap().ok);
    }
    let r = jm::gt_decompose(Level::integer(3), 3).unwrap();
    assert!(r.ok);
    let total: usize = r.rows.iter().map(|row| row.dimension).sum();
    assert_eq!(total, r.space_dim);
}
