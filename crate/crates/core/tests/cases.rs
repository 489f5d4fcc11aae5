use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use adapted_pairs::bounds::{delta_gamma, improved_bound, lower_bound, t_of_gamma};
use adapted_pairs::cascade::kostant_cascade;
use adapted_pairs::certificate::{verify_case, Certificate};
use adapted_pairs::chevalley::{PMinusBasis, StructureTable};
use adapted_pairs::construction::{build_case, cascades, orbit_structure, Candidate};
use adapted_pairs::rootsys::Weight;
use adapted_pairs::verify::{
    check_basis_restriction, check_nondegeneracy, check_regularity, classify_roots, solve_h, stationary_sets,
    Classification,
};
use adapted_pairs::{CaseId, Family, RootId, RootSystem, Q};

fn case(f: Family, n: usize, s: usize) -> Candidate {
    build_case(CaseId::new(f, n, s)).unwrap()
}

fn q(n: i64) -> Q {
    Q::from_integer(n)
}

fn eps(c: &Candidate, terms: &[(usize, i64)]) -> RootId {
    c.system().eps(terms).unwrap()
}

fn coeffs(c: &Candidate, v: &[i32]) -> RootId {
    c.system().root_from_coeffs(v).unwrap()
}

fn varpi(c: &Candidate, k: usize, m: Q) -> Weight {
    c.system().fundamental_weights()[k - 1].scaled(m)
}

fn multiples(cert: &Certificate, lower: bool) -> Vec<Q> {
    let b = if lower { &cert.lower_bound } else { &cert.improved_bound };
    let mut v: Vec<Q> = b.iter().map(|e| e.multiple.as_ref().unwrap().to_q().unwrap()).collect();
    v.sort();
    v
}

fn rep(pairs: &[(i64, i64)]) -> Vec<Q> {
    let mut v: Vec<Q> = pairs.iter().flat_map(|&(w, m)| std::iter::repeat_n(q(w), m as usize)).collect();
    v.sort();
    v
}

#[test]
fn e6_sets() {
    let c = case(Family::E6, 6, 6);
    let sys = c.system();
    let (full, levi) = cascades(&c.parabolic);
    let by_height = |roots: Vec<RootId>| {
        let mut r = roots;
        r.sort_by_key(|&x| -sys.height(x));
        r
    };
    let b = by_height(full.roots());
    let bl = by_height(levi.roots());
    let b1p = bl[0];
    let b2p = *bl.iter().find(|&&r| sys.height(r) == 3).unwrap();
    let last = sys.add(sys.neg(b2p), sys.simple(1)).unwrap();
    let want: BTreeSet<RootId> = [b[0], b[1], b[2], sys.neg(b1p), last].into_iter().collect();
    assert_eq!(c.s_set(), want);

    let t: BTreeSet<RootId> =
        [[0, 0, 0, 1, 0, 0], [0, 0, 0, 0, 0, 1], [0, 1, 1, 1, 0, 0]].iter().map(|v| coeffs(&c, v)).collect();
    assert_eq!(c.t_listed, t);
    assert_eq!(c.derive_t(), t);
}

#[test]
fn e6_pair() {
    let c = case(Family::E6, 6, 6);
    let pair = solve_h(&c).unwrap();
    assert_eq!(pair.h, vec![q(-2), q(-1), q(1), q(6), q(-5), q(0)]);
    let mut ev: Vec<Q> = pair.eigenvalues.iter().map(|e| e.1).collect();
    ev.sort();
    assert_eq!(ev, vec![q(5), q(7), q(17)]);
    assert_eq!(pair.degrees, vec![q(6), q(8), q(18)]);
    for g in c.s_set() {
        assert_eq!(pair.eval(&c, g), q(-1));
    }
}

#[test]
fn e6_coadjoint_examples() {
    let c = case(Family::E6, 6, 6);
    let table = StructureTable::new(c.parabolic.system_arc());
    let y = c.y();
    let d = table.ad_on_dual(&c.parabolic, PMinusBasis::Root(c.system().simple(0)), &y).unwrap();
    let support: BTreeSet<RootId> = d.roots.keys().copied().collect();
    assert_eq!(support, BTreeSet::from([coeffs(&c, &[1, 0, 1, 1, 1, 0])]));
    assert!(d.cartan.iter().all(|x| *x == q(0)));

    let a = coeffs(&c, &[-1, 0, -1, -1, -1, 0]);
    let d = table.ad_on_dual(&c.parabolic, PMinusBasis::Root(a), &y).unwrap();
    let support: BTreeSet<RootId> = d.roots.keys().copied().collect();
    let minus_a1 = c.system().neg(c.system().simple(0));
    assert!(support.contains(&minus_a1));
    assert!(support.is_subset(&BTreeSet::from([minus_a1, c.system().simple(5)])));
    assert!(c.t_star.contains(&minus_a1));
}

#[test]
fn e6_bounds() {
    let c = case(Family::E6, 6, 6);
    let par = &c.parabolic;
    assert_eq!(delta_gamma(par, &[0, 5]).unwrap(), varpi(&c, 6, q(-3)));
    let a4 = c.system().simple(3);
    let (t, w) = t_of_gamma(&c, a4).unwrap();
    assert_eq!(w, varpi(&c, 6, q(6)));
    let sys = c.system();
    let (full, levi) = cascades(par);
    let mut b = full.roots();
    b.sort_by_key(|&x| -sys.height(x));
    let mut bl = levi.roots();
    bl.sort_by_key(|&x| -sys.height(x));
    let b2p = *bl.iter().find(|&&r| sys.height(r) == 3).unwrap();
    let last = sys.add(sys.neg(b2p), sys.simple(1)).unwrap();
    let want: BTreeMap<RootId, Q> =
        [(b[0], q(5)), (b[1], q(3)), (b[2], q(3)), (last, q(2)), (sys.neg(bl[0]), q(4))].into_iter().collect();
    assert_eq!(t.into_iter().collect::<BTreeMap<_, _>>(), want);
    let cert = verify_case(c.case).unwrap();
    assert_eq!(multiples(&cert, true), rep(&[(3, 2), (6, 1)]));
    assert_eq!(multiples(&cert, false), rep(&[(3, 2), (6, 1)]));
}

#[test]
fn e6_flipped_matches() {
    let cert = verify_case(CaseId::new(Family::E6, 6, 1)).unwrap();
    assert!(cert.verdict.pass);
    assert_eq!(cert.degree_values().unwrap(), vec![q(6), q(8), q(18)]);
}

#[test]
fn e7_case() {
    let c = case(Family::E7, 7, 3);
    let sys = c.system();
    assert_eq!(c.t_listed.len(), 5);
    assert!(c.t_listed.contains(&sys.neg(sys.simple(0))));
    let pair = solve_h(&c).unwrap();
    let want = vec![q(-1), Q::new(-13, 2), q(0), q(3), Q::new(11, 2), q(-2), Q::new(-1, 2)];
    assert_eq!(pair.h, want);
    let mut ev: Vec<Q> = pair.eigenvalues.iter().map(|e| e.1).collect();
    ev.sort();
    assert_eq!(ev, [2, 5, 7, 9, 17].map(q).to_vec());
    assert_eq!(pair.degrees, [3, 6, 8, 10, 18].map(q).to_vec());

    assert_eq!(delta_gamma(&c.parabolic, &[3, 5]).unwrap(), varpi(&c, 3, q(-4)));
    let minus_a1 = sys.neg(sys.simple(0));
    let (t, w) = t_of_gamma(&c, minus_a1).unwrap();
    assert_eq!(w, varpi(&c, 3, q(1)));
    let pos: BTreeSet<RootId> = sys.positive_roots().into_iter().collect();
    let beta1 = kostant_cascade(sys, &pos).items[0].root;
    let nonzero: Vec<(RootId, Q)> = t.into_iter().filter(|e| e.1 != q(0)).collect();
    assert_eq!(nonzero, vec![(beta1, q(2))]);
}

#[test]
fn b_sets_and_eigenvalue() {
    for n in 2..=10 {
        for s in (2..=n).step_by(2) {
            let c = case(Family::B, n, s);
            let [_, sm, smix] = c.labels();
            assert_eq!(smix, BTreeSet::from([eps(&c, &[(s, 1)])]));
            for i in 1..s / 2 {
                assert!(sm.contains(&eps(&c, &[(s - i, 1), (i, -1)])));
            }
            let pair = solve_h(&c).unwrap();
            let g = eps(&c, &[(s - 1, 1), (s, 1)]);
            assert_eq!(pair.eval(&c, g), q(s as i64 / 2 - 1), "B{n} s={s}");
        }
    }
}

#[test]
fn b_extremal_complement_and_bounds() {
    for n in (2..=12).step_by(2) {
        let c = case(Family::B, n, n);
        let mut t: BTreeSet<RootId> = (1..=n / 2).map(|i| eps(&c, &[(2 * i - 1, 1), (2 * i, -1)])).collect();
        t.insert(eps(&c, &[(n - 1, 1), (n, 1)]));
        assert_eq!(c.t_listed, t, "B{n}");
        for t in 1..n / 2 {
            assert_eq!(delta_gamma(&c.parabolic, &[t - 1, n - t - 1]).unwrap(), varpi(&c, n, q(-4)));
        }
        let (_, w) = t_of_gamma(&c, eps(&c, &[(n - 1, 1), (n, 1)])).unwrap();
        assert_eq!(w, varpi(&c, n, q(2)));
    }
}

#[test]
fn b_gamma_of_short_root() {
    let c = case(Family::B, 6, 4);
    let os = orbit_structure(&c).unwrap();
    let es = eps(&c, &[(4, 1)]);
    let set = &c.gamma_sets[&es];
    for i in 1..=6 {
        if let Ok(r) = c.system().eps(&[(i, 1)]) {
            if r != es && set.contains(&r) {
                assert_eq!(os.theta(r), c.system().sub(es, r).unwrap());
            }
        }
    }
}

#[test]
fn b_orbit_strata() {
    for n in 3..=10 {
        for s in (2..n).step_by(2) {
            let c = case(Family::B, n, s);
            let os = orbit_structure(&c).unwrap();
            assert_eq!(os.stratum(eps(&c, &[(s, 1), (s + 1, 1)])), 1, "B{n} s={s}");
            let shape: BTreeSet<RootId> = (1..s / 2)
                .flat_map(|j| (s / 2 + 1..s).map(move |i| (i, j)))
                .map(|(i, j)| eps(&c, &[(i, 1), (j, -1)]))
                .collect();
            for &a in os.o.iter().filter(|&&a| os.stratum(a) > 2) {
                assert!(shape.contains(&a), "B{n} s={s}");
                assert!(os.o_minus.contains(&a));
                let sa = &os.s_alpha[&a];
                assert_eq!(sa.intersection(&os.o_minus).copied().collect::<Vec<_>>(), vec![os.theta(a)]);
                assert!(sa.is_disjoint(&os.o_mixed));
            }
            for j in s + 1..=n {
                let a = eps(&c, &[(j, -1)]);
                if os.o.contains(&a) {
                    assert_eq!(os.stratum(os.theta(a)), 1);
                }
            }
        }
    }
}

#[test]
fn b2_small_case() {
    let c = case(Family::B, 2, 2);
    let basis = check_basis_restriction(&c).unwrap();
    assert_eq!(basis.det, (-1).into());
    let table = StructureTable::new(c.parabolic.system_arc());
    let reg = check_regularity(&c, &table).unwrap();
    assert_eq!((reg.dim_p, reg.t_size, reg.rank), (6, 2, 4));
    let os = orbit_structure(&c).unwrap();
    assert_eq!(os.o, BTreeSet::from([eps(&c, &[(1, 1)]), eps(&c, &[(2, 1), (1, -1)])]));
    let nd = check_nondegeneracy(&c, &os, &table).unwrap();
    assert_eq!(nd.size, 2);
    assert!(nd.det != 0.into());
}

#[test]
fn d_sets_and_cyclic_family() {
    for n in 5..=10 {
        for s in (2..=n - 2).step_by(2) {
            let c = case(Family::D, n, s);
            let [_, _, smix] = c.labels();
            assert_eq!(smix, BTreeSet::from([eps(&c, &[(s, 1), (n, -1)]), eps(&c, &[(s, 1), (n, 1)])]));
            let os = orbit_structure(&c).unwrap();
            let a = eps(&c, &[(s - 1, 1), (n, 1)]);
            let b = eps(&c, &[(s, 1), (s - 1, -1)]);
            let g = eps(&c, &[(s, 1), (s + 1, -1)]);
            let sys = c.system();
            let t = |x| os.theta(x);
            assert_eq!(sys.add(t(a), g), Some(eps(&c, &[(s, 1), (n, -1)])));
            assert_eq!(sys.add(t(b), t(g)), Some(eps(&c, &[(s - 1, 1), (s + 1, 1)])));
            let cl = classify_roots(sys, &os, c.criterion);
            assert_eq!(cl.traces[&a].classification, Classification::Cyclic, "D{n} s={s}");
        }
    }
}

#[test]
fn d_extremal_cases() {
    for n in [6, 8, 10, 12] {
        let c = case(Family::D, n, n);
        assert_eq!(check_basis_restriction(&c).unwrap().det.magnitude().clone(), 2u32.into(), "D{n}");
        let cert = verify_case(c.case).unwrap();
        assert!(cert.verdict.pass);
        let want = rep(&[(2, 3), (4, n as i64 / 2 - 2)]);
        assert_eq!(multiples(&cert, true), want);
        assert_eq!(multiples(&cert, false), want);
    }
    let c = case(Family::D, 10, 10);
    let os = orbit_structure(&c).unwrap();
    let st = stationary_sets(c.system(), &os, c.criterion);
    let cl = classify_roots(c.system(), &os, c.criterion);
    let centre = eps(&c, &[(4, 1), (2, -1)]);
    for &r in c.gamma_sets[&centre].iter().filter(|&&r| r != centre) {
        assert!(st.contains_key(&r));
        if let Some(tr) = cl.traces.get(&r) {
            // the walk never leaves O₁ ⊔ O₂ here, so the plain label is reported
            assert!(matches!(tr.classification, Classification::Stationary | Classification::ExtendedStationary));
        }
    }
}

#[test]
fn d6_extremal_eigenvalues() {
    let pair = solve_h(&case(Family::D, 6, 6)).unwrap();
    let mut ev: Vec<Q> = pair.eigenvalues.iter().map(|e| e.1).collect();
    ev.sort();
    assert_eq!(ev, [2, 4, 6, 11].map(q).to_vec());
    assert_eq!(pair.degrees, [3, 5, 7, 12].map(q).to_vec());
}

#[test]
fn classical_bounds() {
    for n in 3..=10 {
        for s in (2..n).step_by(2) {
            let cert = verify_case(CaseId::new(Family::B, n, s)).unwrap();
            let want = rep(&[(1, 2), (2, (n - 1 - s / 2) as i64)]);
            assert_eq!(multiples(&cert, true), want, "B{n} s={s}");
            assert_eq!(multiples(&cert, false), want);
        }
    }
    for n in 4..=10 {
        for s in (2..=n - 2).step_by(2) {
            let cert = verify_case(CaseId::new(Family::D, n, s)).unwrap();
            let want = rep(&[(1, 3), (2, (n - 2 - s / 2) as i64)]);
            assert_eq!(multiples(&cert, true), want, "D{n} s={s}");
            assert_eq!(multiples(&cert, false), want);
        }
    }
}

#[test]
fn bound_weights_lie_on_the_line() {
    for c in [case(Family::B, 7, 4), case(Family::D, 9, 4), case(Family::E7, 7, 3)] {
        let lo = lower_bound(&c.parabolic).unwrap();
        let im = improved_bound(&c).unwrap();
        assert_eq!(lo.len(), c.parabolic.index());
        assert!(lo.multiples().is_some() && im.multiples().is_some());
    }
}

#[test]
fn scope_errors() {
    assert!(verify_case(CaseId::new(Family::B, 5, 3)).is_err());
    assert!(verify_case(CaseId::new(Family::D, 4, 4)).is_err());
    assert!(verify_case(CaseId::new(Family::E7, 7, 1)).is_err());
    assert!(RootSystem::new(Family::E6, 5).is_err());
    let _ = Arc::new(RootSystem::new(Family::B, 3).unwrap());
}
