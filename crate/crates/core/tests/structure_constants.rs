use std::sync::Arc;

use adapted_pairs::audit::{all_triples, jacobi_defects, jacobiator, string_law_defects};
use adapted_pairs::chevalley::{Elem, StructureTable};
use adapted_pairs::{Family, RootSystem, Q};
use proptest::prelude::*;

fn table(family: Family, rank: usize) -> StructureTable {
    StructureTable::new(Arc::new(RootSystem::new(family, rank).unwrap()))
}

fn small_tables() -> Vec<StructureTable> {
    let mut v: Vec<StructureTable> = (2..=6).map(|n| table(Family::B, n)).collect();
    v.extend((4..=6).map(|n| table(Family::D, n)));
    v.push(table(Family::E6, 6));
    v
}

#[test]
fn jacobi_exhaustive_up_to_rank_six() {
    for t in small_tables() {
        let n = t.system().len();
        let bad = jacobi_defects(&t, all_triples(n));
        assert!(bad.is_empty(), "{}{}: {} failing triples", t.system().family, t.system().rank, bad.len());
    }
}

#[test]
fn jacobi_with_cartan_elements() {
    for t in small_tables() {
        let sys = t.system();
        for i in 0..sys.rank {
            let h = Elem::cartan_vector(sys.simple_coroot(i));
            for a in 0..sys.len() {
                for b in 0..sys.len() {
                    let (x, y) = (Elem::root_vector(sys.dim, a), Elem::root_vector(sys.dim, b));
                    let mut j = t.bracket(&h, &t.bracket(&x, &y));
                    j.add_scaled(Q::from_integer(1), &t.bracket(&x, &t.bracket(&y, &h)));
                    j.add_scaled(Q::from_integer(1), &t.bracket(&y, &t.bracket(&h, &x)));
                    assert!(j.is_zero());
                }
            }
        }
    }
}

#[test]
fn root_string_law() {
    for t in small_tables().into_iter().chain([table(Family::E7, 7), table(Family::B, 8), table(Family::D, 8)]) {
        assert!(string_law_defects(&t).is_empty(), "{}{}", t.system().family, t.system().rank);
    }
}

#[test]
fn antisymmetry_and_zeros() {
    for t in small_tables() {
        let sys = t.system();
        for a in 0..sys.len() {
            for b in 0..sys.len() {
                assert_eq!(t.n(a, b), -t.n(b, a));
                if sys.add(a, b).is_none() {
                    assert_eq!(t.n(a, b), 0);
                }
            }
        }
    }
}

#[test]
fn b2_example() {
    let t = table(Family::B, 2);
    let sys = t.system();
    let a2 = sys.simple(1);
    let a12 = sys.root_from_coeffs(&[1, 1]).unwrap();
    assert_eq!(t.n(a2, a12).abs(), 2);
}

#[test]
fn cartan_acts_by_weights() {
    let t = table(Family::D, 5);
    let sys = t.system();
    let h = sys.simple_coroot(2);
    for g in 0..sys.len() {
        let out = t.bracket(&Elem::cartan_vector(h.clone()), &Elem::root_vector(sys.dim, g));
        let mut want = Elem::zero(sys.dim);
        want.add_root(g, Q::from_integer(sys.pairing(g, sys.simple(2)) as i64));
        assert_eq!(out, want);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn jacobi_sampled_e7(a in 0usize..126, b in 0usize..126, c in 0usize..126) {
        thread_local!(static E7: StructureTable = table(Family::E7, 7));
        let ok = E7.with(|t| jacobiator(t, a, b, c).is_zero());
        prop_assert!(ok);
    }
}
