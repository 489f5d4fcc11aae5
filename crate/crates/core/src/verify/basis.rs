use num_bigint::BigInt;
use num_traits::Zero;

use crate::construction::Candidate;
use crate::linalg::bareiss_det;
use crate::parabolic::ParabolicData;
use crate::rootsys::RootId;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisReport {
    pub ok: bool,
    pub det: BigInt,
}

/// `(γ(α_j∨))` with rows the given roots and columns `j ≠ s`.
pub fn restriction_matrix(par: &ParabolicData, roots: &[RootId]) -> Vec<Vec<i64>> {
    let sys = par.system();
    roots.iter().map(|&g| par.h_lambda().iter().map(|&j| sys.pairing(g, sys.simple(j)) as i64).collect()).collect()
}

pub fn check_basis_restriction(c: &Candidate) -> Result<BasisReport> {
    let s: Vec<RootId> = c.s_set().into_iter().collect();
    let k = c.parabolic.h_lambda().len();
    if s.len() != k {
        return Err(Error::SizeMismatch(format!("|S| = {} but dim h_Λ = {k}", s.len())));
    }
    let m: Vec<Vec<BigInt>> =
        restriction_matrix(&c.parabolic, &s).into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect();
    let det = bareiss_det(&m);
    Ok(BasisReport { ok: !det.is_zero(), det })
}
