use num_rational::BigRational;

use crate::construction::{closed_forms, Candidate};
use crate::linalg::{from_big, solve_big};
use crate::rootsys::RootId;
use crate::verify::restriction_matrix;
use crate::{Error, Result, Q};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdaptedPair {
    /// Coefficients of h on `α_1∨, …, α_n∨`; the `α_s∨` entry is zero.
    pub h: Vec<Q>,
    /// `γ(h)` for `γ ∈ T`, in root order.
    pub eigenvalues: Vec<(RootId, Q)>,
    /// Sorted `γ(h) + 1`.
    pub degrees: Vec<Q>,
}

impl AdaptedPair {
    /// `γ(h)` for any root.
    pub fn eval(&self, c: &Candidate, g: RootId) -> Q {
        let sys = c.system();
        (0..sys.rank).map(|j| self.h[j] * Q::from_integer(sys.pairing(g, sys.simple(j)) as i64)).sum()
    }
}

/// The unique `h ∈ h_Λ` with `γ(h) = −1` for all `γ ∈ S`.
pub fn solve_h(c: &Candidate) -> Result<AdaptedPair> {
    let s: Vec<RootId> = c.s_set().into_iter().collect();
    let a: Vec<Vec<BigRational>> = restriction_matrix(&c.parabolic, &s)
        .into_iter()
        .map(|r| r.into_iter().map(|x| BigRational::from_integer(x.into())).collect())
        .collect();
    if a.len() != c.parabolic.h_lambda().len() {
        return Err(Error::SizeMismatch(format!("|S| = {} but dim h_Λ = {}", a.len(), c.parabolic.h_lambda().len())));
    }
    let rhs = vec![BigRational::from_integer((-1).into()); s.len()];
    let x = solve_big(&a, &rhs).ok_or_else(|| Error::Singular("S restricted to h_Λ".into()))?;
    let sys = c.system();
    let mut h = vec![Q::from_integer(0); sys.rank];
    for (k, &j) in c.parabolic.h_lambda().iter().enumerate() {
        h[j] = from_big(&x[k]).ok_or_else(|| Error::Singular("h does not fit in 64-bit rationals".into()))?;
    }
    let mut pair = AdaptedPair { h, eigenvalues: Vec::new(), degrees: Vec::new() };
    pair.eigenvalues = c.t_listed.iter().map(|&g| (g, pair.eval(c, g))).collect();
    pair.degrees = pair.eigenvalues.iter().map(|&(_, v)| v + Q::from_integer(1)).collect();
    pair.degrees.sort();
    Ok(pair)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenvalueReport {
    pub ok: bool,
    /// `γ(h) = −1` on S, i.e. `(ad h) y = −y`.
    pub eigenvector_ok: bool,
    pub computed: Vec<Q>,
    pub expected: Vec<i64>,
    /// Comparison with an explicitly printed h, when there is one.
    pub h_matches: Option<bool>,
}

pub fn eigenvalue_report(pair: &AdaptedPair, c: &Candidate) -> Result<EigenvalueReport> {
    let eigenvector_ok = c.s_set().into_iter().all(|g| pair.eval(c, g) == Q::from_integer(-1));
    let mut computed: Vec<Q> = pair.eigenvalues.iter().map(|&(_, v)| v).collect();
    computed.sort();
    let expected = closed_forms::eigenvalues(c.case)?;
    let matches =
        computed.len() == expected.len() && computed.iter().zip(&expected).all(|(a, &b)| *a == Q::from_integer(b));
    let h_matches = closed_forms::expected_h(c.case).map(|h| h == pair.h);
    Ok(EigenvalueReport {
        ok: eigenvector_ok && matches && h_matches != Some(false),
        eigenvector_ok,
        computed,
        expected,
        h_matches,
    })
}
