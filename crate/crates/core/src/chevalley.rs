//! Integer structure constants of a Chevalley basis and the brackets built
//! from them.
//!
//! Signs follow the extraspecial-pair convention: positive roots are ordered
//! lexicographically by simple-root coefficients, `N_{α,β} = +(p+1)` on every
//! extraspecial pair, and all other constants follow from the standard
//! three- and four-term relations. Every downstream check is sign-robust.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::Zero;

use crate::parabolic::ParabolicData;
use crate::rootsys::{RootId, RootSystem};
use crate::{Error, Result, Q};

/// An element of g: root-vector coefficients plus a Cartan part written as
/// an ε-vector (h identified with h* through the ε-form).
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Elem {
    pub roots: BTreeMap<RootId, Q>,
    pub cartan: Vec<Q>,
}

impl Elem {
    pub fn zero(dim: usize) -> Self {
        Elem { roots: BTreeMap::new(), cartan: vec![Q::zero(); dim] }
    }

    pub fn root_vector(dim: usize, id: RootId) -> Self {
        let mut e = Elem::zero(dim);
        e.roots.insert(id, Q::from_integer(1));
        e
    }

    pub fn cartan_vector(h: Vec<Q>) -> Self {
        Elem { roots: BTreeMap::new(), cartan: h }
    }

    pub fn is_zero(&self) -> bool {
        self.roots.is_empty() && self.cartan.iter().all(|x| x.is_zero())
    }

    pub fn add_root(&mut self, id: RootId, c: Q) {
        if c.is_zero() {
            return;
        }
        let e = self.roots.entry(id).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.roots.remove(&id);
        }
    }

    pub fn add_cartan(&mut self, c: Q, h: &[Q]) {
        for (x, y) in self.cartan.iter_mut().zip(h) {
            *x += c * y;
        }
    }

    pub fn add_scaled(&mut self, c: Q, other: &Elem) {
        for (&id, &v) in &other.roots {
            self.add_root(id, c * v);
        }
        self.add_cartan(c, &other.cartan);
    }
}

/// A basis vector of p⁻ = n⁻ ⊕ h_Λ ⊕ n_{π′}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum PMinusBasis {
    Root(RootId),
    /// Simple coroot α_j∨ (0-based j ≠ s−1).
    Coroot(usize),
}

/// An element of p* realised on g_{Δ⁺} ⊕ h_Λ ⊕ g_{Δ⁻_{π′}}; the Cartan part
/// is recorded through its values on the coroot basis of h_Λ.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct DualElem {
    pub roots: BTreeMap<RootId, Q>,
    pub cartan: Vec<Q>,
}

#[derive(Debug, Clone)]
pub struct StructureTable {
    system: Arc<RootSystem>,
    n: Vec<i32>,
}

struct Builder<'a> {
    sys: &'a RootSystem,
    positive: Vec<Option<Q>>,
}

impl Builder<'_> {
    fn get(&self, a: RootId, b: RootId) -> Q {
        let sys = self.sys;
        let Some(sum) = sys.add(a, b) else { return Q::zero() };
        let len = sys.len();
        match (sys.is_positive(a), sys.is_positive(b)) {
            (true, true) => self.positive[a * len + b].expect("structure constants are filled by height"),
            (false, false) => -self.get(sys.neg(a), sys.neg(b)),
            (false, true) => -self.get(b, a),
            (true, false) => {
                // a + b + c = 0 gives N_{a,b}/|c|² = N_{b,c}/|a|² = N_{c,a}/|b|².
                let c = sys.neg(sum);
                if sys.is_positive(sum) {
                    -(sys.norm2(c) / sys.norm2(a)) * self.get(sys.neg(b), sys.neg(c))
                } else {
                    sys.norm2(c) / sys.norm2(b) * self.get(c, a)
                }
            }
        }
    }
}

/// Largest `p` with `b − p·a ∈ Δ`.
pub fn string_below(sys: &RootSystem, a: RootId, b: RootId) -> i32 {
    let mut p = 0;
    let mut cur = b;
    while let Some(next) = sys.sub(cur, a) {
        p += 1;
        cur = next;
    }
    p
}

impl StructureTable {
    pub fn new(system: Arc<RootSystem>) -> Self {
        let sys = &*system;
        let len = sys.len();
        let mut positives = sys.positive_roots();
        positives.sort_by_key(|&r| (sys.height(r), r));
        let mut b = Builder { sys, positive: vec![None; len * len] };
        for &xi in &positives {
            let pairs: Vec<(RootId, RootId)> = sys
                .positive_roots()
                .into_iter()
                .filter_map(|a| sys.sub(xi, a).filter(|&c| sys.is_positive(c) && a < c).map(|c| (a, c)))
                .collect();
            let Some(&(a0, b0)) = pairs.first() else { continue };
            let n0 = Q::from_integer(string_below(sys, a0, b0) as i64 + 1);
            b.positive[a0 * len + b0] = Some(n0);
            b.positive[b0 * len + a0] = Some(-n0);
            let (na0, nb0) = (sys.neg(a0), sys.neg(b0));
            for &(a, c) in &pairs[1..] {
                let mut acc = Q::zero();
                if let Some(d) = sys.add(c, na0) {
                    acc += b.get(c, na0) * b.get(a, nb0) / sys.norm2(d);
                }
                if let Some(d) = sys.add(a, na0) {
                    acc += b.get(na0, a) * b.get(c, nb0) / sys.norm2(d);
                }
                let v = sys.norm2(xi) / n0 * acc;
                b.positive[a * len + c] = Some(v);
                b.positive[c * len + a] = Some(-v);
            }
        }
        let mut n = vec![0; len * len];
        for x in 0..len {
            for y in 0..len {
                if sys.add(x, y).is_some() {
                    let v = b.get(x, y);
                    assert!(v.is_integer(), "non-integral structure constant");
                    n[x * len + y] = *v.numer() as i32;
                }
            }
        }
        StructureTable { system, n }
    }

    pub fn system(&self) -> &RootSystem {
        &self.system
    }

    pub fn system_arc(&self) -> Arc<RootSystem> {
        Arc::clone(&self.system)
    }

    /// `N_{a,b}`, zero when `a + b` is not a root.
    pub fn n(&self, a: RootId, b: RootId) -> i32 {
        self.n[a * self.system.len() + b]
    }

    /// `[x_a, x_b]`.
    pub fn bracket_roots(&self, a: RootId, b: RootId) -> Elem {
        let sys = &*self.system;
        let mut out = Elem::zero(sys.dim);
        if let Some(c) = sys.add(a, b) {
            out.add_root(c, Q::from_integer(self.n(a, b) as i64));
        } else if sys.neg(a) == b {
            out.cartan = sys.coroot(a);
        }
        out
    }

    pub fn bracket(&self, x: &Elem, y: &Elem) -> Elem {
        let sys = &*self.system;
        let mut out = Elem::zero(sys.dim);
        for (&a, &ca) in &x.roots {
            for (&b, &cb) in &y.roots {
                let br = self.bracket_roots(a, b);
                out.add_scaled(ca * cb, &br);
            }
            // [x_a, H] = −a(H) x_a
            let ah: Q = sys.root(a).coords.iter().zip(&y.cartan).map(|(p, q)| p * q).sum();
            out.add_root(a, -ca * ah);
        }
        for (&b, &cb) in &y.roots {
            let bh: Q = sys.root(b).coords.iter().zip(&x.cartan).map(|(p, q)| p * q).sum();
            out.add_root(b, cb * bh);
        }
        out
    }

    /// Coadjoint action of a basis vector of p⁻ on `y ∈ p*`: the bracket in
    /// g followed by projection onto g_{Δ⁺} ⊕ h_Λ ⊕ g_{Δ⁻_{π′}}.
    pub fn ad_on_dual(&self, par: &ParabolicData, x: PMinusBasis, y: &Elem) -> Result<DualElem> {
        let sys = &*self.system;
        if let Some(&bad) = y.roots.keys().find(|&&r| !par.in_p_dual(r)) {
            return Err(Error::UnsupportedSupport(format!("y has a component on {}", sys.format_root(bad))));
        }
        let xe = match x {
            PMinusBasis::Root(r) if par.in_p_minus(r) => Elem::root_vector(sys.dim, r),
            PMinusBasis::Coroot(j) if j < sys.rank && j + 1 != par.s => Elem::cartan_vector(sys.simple_coroot(j)),
            other => return Err(Error::UnsupportedSupport(format!("{other:?} is not a basis vector of p⁻"))),
        };
        let br = self.bracket(&xe, y);
        let roots = br.roots.into_iter().filter(|(r, _)| par.in_p_dual(*r)).collect();
        let cartan = par
            .h_lambda()
            .iter()
            .map(|&j| br.cartan.iter().zip(sys.simple_coroot(j)).map(|(p, q)| p * q).sum())
            .collect();
        Ok(DualElem { roots, cartan })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Family;

    #[test]
    fn b2_short_long_constant() {
        let sys = Arc::new(RootSystem::new(Family::B, 2).unwrap());
        let t = StructureTable::new(Arc::clone(&sys));
        let a2 = sys.simple(1);
        let a12 = sys.root_from_coeffs(&[1, 1]).unwrap();
        assert_eq!(t.n(a2, a12).abs(), 2);
        assert_eq!(t.n(a2, a2), 0);
    }

    #[test]
    fn antisymmetric() {
        let sys = Arc::new(RootSystem::new(Family::D, 5).unwrap());
        let t = StructureTable::new(Arc::clone(&sys));
        for a in 0..sys.len() {
            for b in 0..sys.len() {
                assert_eq!(t.n(a, b) + t.n(b, a), 0);
            }
        }
    }
}
