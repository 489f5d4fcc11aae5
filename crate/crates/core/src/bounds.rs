//! The lower character bound ch A (through the weights δ_Γ) and the
//! improved upper bound B′ (through t(γ)), as multisets of weights.
//!
//! Every bound in scope is a product of factors `(1 − e^{−w})^{−1}`, so the
//! multiset of the `w` determines the character.

use std::collections::BTreeMap;

use num_rational::BigRational;

use crate::construction::Candidate;
use crate::linalg::{from_big, solve_big};
use crate::parabolic::ParabolicData;
use crate::rootsys::{RootId, Weight};
use crate::verify::restriction_matrix;
use crate::{Error, Result, Q};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundEntry {
    pub weight: Weight,
    /// `c` with `weight = c ϖ_s`, when the weight lies on that line.
    pub multiple: Option<Q>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BoundMultiset {
    /// Sorted by weight coordinates.
    pub entries: Vec<BoundEntry>,
}

impl BoundMultiset {
    fn new(par: &ParabolicData, weights: Vec<Weight>) -> Self {
        let ws = &par.system().fundamental_weights()[par.s - 1];
        let mut entries: Vec<BoundEntry> =
            weights.into_iter().map(|w| BoundEntry { multiple: w.ratio_to(ws), weight: w }).collect();
        entries.sort_by(|a, b| a.weight.coords.cmp(&b.weight.coords));
        BoundMultiset { entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Sorted multiples of ϖ_s; `None` if some entry is off that line.
    pub fn multiples(&self) -> Option<Vec<Q>> {
        let mut v: Option<Vec<Q>> = self.entries.iter().map(|e| e.multiple).collect();
        if let Some(v) = v.as_mut() {
            v.sort();
        }
        v
    }
}

/// `δ_Γ = −Σ_{Γ} ϖ − Σ_{j(Γ)} ϖ + Σ_{Γ∩π′} ϖ′ + Σ_{i(Γ∩π′)} ϖ′`.
pub fn delta_gamma(par: &ParabolicData, orbit: &[usize]) -> Result<Weight> {
    let sys = par.system();
    let fw = sys.fundamental_weights();
    let levi: BTreeMap<usize, Weight> = sys.levi_weights(&par.pi_prime)?.into_iter().collect();
    let one = Q::from_integer(1);
    let mut d = Weight::zero(sys.dim);
    for &g in orbit {
        if g >= sys.rank {
            return Err(Error::BadSimpleIndex(g + 1));
        }
        d.add_scaled(-one, &fw[g].coords);
        d.add_scaled(-one, &fw[par.j[g]].coords);
        if let Some(w) = levi.get(&g) {
            d.add_scaled(one, &w.coords);
            d.add_scaled(one, &levi[&par.i[g]].coords);
        }
    }
    Ok(d)
}

/// `{−δ_Γ : Γ ∈ E(π′)}`.
pub fn lower_bound(par: &ParabolicData) -> Result<BoundMultiset> {
    let ws = par
        .orbits
        .iter()
        .map(|o| delta_gamma(par, o).map(|d| d.scaled(Q::from_integer(-1))))
        .collect::<Result<Vec<_>>>()?;
    Ok(BoundMultiset::new(par, ws))
}

/// The unique `t(γ) ∈ Q S` with `γ + t(γ)` vanishing on h_Λ, as coefficients
/// on S (in root order), together with the weight `γ + t(γ)`.
pub fn t_of_gamma(c: &Candidate, g: RootId) -> Result<(Vec<(RootId, Q)>, Weight)> {
    let sys = c.system();
    let s: Vec<RootId> = c.s_set().into_iter().collect();
    let m = restriction_matrix(&c.parabolic, &s);
    let k = c.parabolic.h_lambda().len();
    if s.len() != k {
        return Err(Error::SizeMismatch(format!("|S| = {} but dim h_Λ = {k}", s.len())));
    }
    // Σ_γ' c_γ' γ'(α_j∨) = −γ(α_j∨): the transpose system.
    let a: Vec<Vec<BigRational>> =
        (0..k).map(|j| (0..k).map(|i| BigRational::from_integer(m[i][j].into())).collect()).collect();
    let gm = restriction_matrix(&c.parabolic, &[g]);
    let rhs: Vec<BigRational> = gm[0].iter().map(|&x| BigRational::from_integer((-x).into())).collect();
    let x = solve_big(&a, &rhs).ok_or_else(|| Error::Singular("S restricted to h_Λ".into()))?;
    let coeffs: Vec<(RootId, Q)> = s
        .iter()
        .zip(&x)
        .map(|(&r, v)| from_big(v).map(|q| (r, q)).ok_or_else(|| Error::Singular("t(γ) overflow".into())))
        .collect::<Result<_>>()?;
    let mut w = Weight { coords: sys.root(g).coords.clone() };
    for &(r, q) in &coeffs {
        w.add_scaled(q, &sys.root(r).coords);
    }
    Ok((coeffs, w))
}

/// `{γ + t(γ) : γ ∈ T}`.
pub fn improved_bound(c: &Candidate) -> Result<BoundMultiset> {
    let ws = c.t_listed.iter().map(|&g| t_of_gamma(c, g).map(|(_, w)| w)).collect::<Result<Vec<_>>>()?;
    Ok(BoundMultiset::new(&c.parabolic, ws))
}

/// Multiset equality, i.e. equality of the two characters.
pub fn certify_coincidence(lower: &BoundMultiset, improved: &BoundMultiset) -> bool {
    lower.entries.len() == improved.entries.len()
        && lower.entries.iter().zip(&improved.entries).all(|(a, b)| a.weight == b.weight)
}
