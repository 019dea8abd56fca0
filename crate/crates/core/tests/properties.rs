use proptest::prelude::*;

use tppa_core::bratteli::rhat;
use tppa_core::combinat::{f_lambda, stirling2, SetPartition, SetPartitionTableau, YoungDiagram};
use tppa_core::diagram::{diagram_product, from_orbit, to_orbit, AlgebraElement, Basis, PartitionDiagram};
use tppa_core::formal::FormalSum;
use tppa_core::rook::{factor_to_word, rook_mul, RookElement};
use tppa_core::rsk::{insert_at, uninsert};
use tppa_core::scalar::{rat, Poly};
use tppa_core::seminormal::RookIrrep;
use tppa_core::Level;

fn rook(n: usize) -> impl Strategy<Value = RookElement> {
    (
        Just((0..n).collect::<Vec<_>>()).prop_shuffle(),
        prop::collection::vec(any::<bool>(), n),
    )
        .prop_map(|(perm, keep)| {
            let map = perm.into_iter().zip(keep).map(|(r, k)| k.then_some(r)).collect();
            RookElement::from_map(map).unwrap()
        })
}

fn rook_triple() -> impl Strategy<Value = (RookElement, RookElement, RookElement)> {
    (1usize..=5).prop_flat_map(|n| (rook(n), rook(n), rook(n)))
}

fn rgs(len: usize) -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(0u8..len as u8, len).prop_map(|raw| {
        // clamp into a restricted growth string
        let mut out = Vec::with_capacity(raw.len());
        let mut top = 0u8;
        for (i, x) in raw.into_iter().enumerate() {
            let v = if i == 0 { 0 } else { x.min(top + 1) };
            top = top.max(v);
            out.push(v);
        }
        out
    })
}

fn diagram(k: usize) -> impl Strategy<Value = PartitionDiagram> {
    rgs(2 * k).prop_map(move |r| PartitionDiagram::from_rgs(k, &r))
}

fn element(k: usize, basis: Basis) -> impl Strategy<Value = AlgebraElement> {
    prop::collection::vec((diagram(k), -3i64..=3), 1..4).prop_map(move |terms| {
        let mut s = FormalSum::zero();
        for (d, c) in terms {
            s.add_term(d, Poly::constant(rat(c)));
        }
        AlgebraElement::from_sum(k, basis, s).unwrap()
    })
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(-5i64..=5, 0..4).prop_map(|c| Poly::new(c.into_iter().map(rat).collect()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rook_product_is_associative((a, b, c) in rook_triple()) {
        let left = rook_mul(&rook_mul(&a, &b).unwrap(), &c).unwrap();
        let right = rook_mul(&a, &rook_mul(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn rook_product_is_matrix_product((a, b, _) in rook_triple()) {
        let n = a.n();
        let ab = rook_mul(&a, &b).unwrap();
        for i in 1..=n {
            for j in 1..=n {
                let m = (1..=n).any(|l| a.matrix_entry(i, l) && b.matrix_entry(l, j));
                prop_assert_eq!(ab.matrix_entry(i, j), m);
            }
        }
    }

    #[test]
    fn generator_words_evaluate_back((a, _, _) in rook_triple()) {
        prop_assert_eq!(factor_to_word(&a).evaluate(a.n()).unwrap(), a);
    }

    #[test]
    fn seminormal_rep_is_multiplicative((a, b, _) in (1usize..=4).prop_flat_map(|n| (rook(n), rook(n), rook(n)))) {
        let n = a.n();
        let ab = rook_mul(&a, &b).unwrap();
        for l in tppa_core::combinat::partitions_upto(n) {
            let v = RookIrrep::new(&l, n).unwrap();
            let lhs = v.rep_element(&ab).unwrap();
            let rhs = v.rep_element(&a).unwrap().mul(&v.rep_element(&b).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn orbit_change_of_basis_round_trips(x in (1usize..=3).prop_flat_map(|k| element(k, Basis::Diagram))) {
        let y = to_orbit(&x);
        prop_assert_eq!(y.basis(), Basis::Orbit);
        prop_assert_eq!(from_orbit(&y), x);
    }

    #[test]
    fn diagram_product_is_associative(
        (a, b, c) in (1usize..=2).prop_flat_map(|k| {
            (element(k, Basis::Diagram), element(k, Basis::Diagram), element(k, Basis::Diagram))
        })
    ) {
        let left = diagram_product(&diagram_product(&a, &b).unwrap(), &c).unwrap();
        let right = diagram_product(&a, &diagram_product(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn insert_then_uninsert(r in (1usize..=7).prop_flat_map(rgs), order in any::<u64>()) {
        let p = SetPartition::from_rgs(&r);
        let mut blocks = p.blocks().to_vec();
        let len = blocks.len();
        blocks.rotate_left((order % len as u64) as usize);

        let mut t = SetPartitionTableau::empty();
        let mut history = Vec::new();
        for b in &blocks {
            let (next, cell) = insert_at(&t, b).unwrap();
            prop_assert!(next.shape().size() == t.shape().size() + 1);
            history.push((t, cell));
            t = next;
        }
        for b in blocks.iter().rev() {
            let (prev, cell) = history.pop().unwrap();
            let (back, out) = uninsert(&t, cell).unwrap();
            prop_assert_eq!(&out, b);
            prop_assert_eq!(&back, &prev);
            t = back;
        }
    }

    #[test]
    fn rhat_path_count_formula(k in 1usize..=5, n in 1usize..=4, pick in any::<prop::sample::Index>()) {
        let shapes: Vec<YoungDiagram> = tppa_core::combinat::partitions_upto(k.min(n))
            .into_iter()
            .filter(|l| !l.is_empty())
            .collect();
        let l = pick.get(&shapes);
        let g = rhat(n, k);
        let one = YoungDiagram::new(vec![1]).unwrap();
        let count = g.count_paths((Level::integer(1), &one), (Level::integer(k as u32), l)).unwrap();
        prop_assert_eq!(count, stirling2(k, l.size()) * f_lambda(l));
    }

    #[test]
    fn poly_ring_laws(a in poly(), b in poly(), c in poly(), x in -6i64..=6) {
        let x = rat(x);
        prop_assert_eq!((a.clone() * (b.clone() + c.clone())).eval(&x), a.eval(&x) * (b.eval(&x) + c.eval(&x)));
        prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
        prop_assert_eq!(a.clone() - a.clone(), Poly::new(vec![]));
        prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a * (b * c));
    }
}
