//! The restriction of Φ_y to o × o, o = g_{−O}.
//!
//! With the pairing normalised by K(x_γ, x_{−γ}) = 1 (any other choice is
//! absorbed into the coefficients of y, which h_Λ can rescale freely once
//! `S|h_Λ` is a basis), the matrix entry at (α, β) is `N_{−α,−β}` when
//! `α + β ∈ S` and zero otherwise.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::chevalley::StructureTable;
use crate::construction::{Candidate, OrbitStructure};
use crate::linalg::{as_monomial, eliminate, poly_det, solve_big, to_big, Poly, SparseVec};
use crate::rootsys::RootId;
use crate::verify::restriction_matrix;
use crate::Result;

/// Above this size the graded determinant is certified by diagonal scaling
/// only, not expanded as a polynomial.
pub const POLYNOMIAL_LIMIT: usize = 40;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NondegeneracyReport {
    pub ok: bool,
    pub size: usize,
    pub det: BigInt,
    /// `2 Σ_{α∈Õ} |ρ(α+θ(α))|`.
    pub expected_degree: u64,
    /// Degree of det M(t) obtained through the grading element λ ∈ h_Λ.
    pub scaled_degree: Option<u64>,
    /// `(coefficient, degree)` of the expanded det M(t), for small sizes.
    pub polynomial: Option<(BigInt, u64)>,
    pub monomial_ok: bool,
}

/// Rows of M indexed like `O` (sorted), optionally graded by `t^{|ρ(α+β)|}`.
pub fn pairing_rows(
    os: &OrbitStructure,
    table: &StructureTable,
    s_set: &BTreeSet<RootId>,
) -> Vec<Vec<(usize, i64, u32)>> {
    let sys = table.system();
    let o: Vec<RootId> = os.o.iter().copied().collect();
    let pos = |r: RootId| o.binary_search(&r).expect("S_α lies in O");
    o.iter()
        .map(|&a| {
            os.s_alpha[&a]
                .iter()
                .map(|&b| {
                    let g = sys.add(a, b).expect("α + β ∈ S");
                    debug_assert!(s_set.contains(&g));
                    let n = table.n(sys.neg(a), sys.neg(b)) as i64;
                    (pos(b), n, sys.height(g).unsigned_abs())
                })
                .collect()
        })
        .collect()
}

pub fn check_nondegeneracy(c: &Candidate, os: &OrbitStructure, table: &StructureTable) -> Result<NondegeneracyReport> {
    let sys = c.system();
    let s_set = c.s_set();
    let rows = pairing_rows(os, table, &s_set);
    let size = rows.len();

    let expected_degree: u64 = os.o.iter().map(|&a| sys.height(os.centre_of[&a]).unsigned_abs() as u64).sum();

    let sparse: Vec<SparseVec> = rows
        .iter()
        .map(|r| r.iter().map(|&(j, n, _)| (j, BigRational::from_integer(BigInt::from(n)))).collect())
        .collect();
    let det = if size == 0 {
        BigInt::from(1)
    } else {
        let e = eliminate(sparse, size);
        e.det.map(|d| d.to_integer()).unwrap_or_else(BigInt::zero)
    };

    // λ ∈ h_Λ with γ(λ) = |ρ(γ)| on S; conjugating by t^λ turns M into M(t),
    // so det M(t) = t^{2 Σ_O α(λ)} det M.
    let s_list: Vec<RootId> = s_set.iter().copied().collect();
    let a: Vec<Vec<BigRational>> = restriction_matrix(&c.parabolic, &s_list)
        .into_iter()
        .map(|r| r.into_iter().map(|x| BigRational::from_integer(x.into())).collect())
        .collect();
    let rhs: Vec<BigRational> =
        s_list.iter().map(|&g| BigRational::from_integer(sys.height(g).unsigned_abs().into())).collect();
    let scaled_degree =
        (a.len() == c.parabolic.h_lambda().len()).then(|| solve_big(&a, &rhs)).flatten().and_then(|lambda| {
            let mut total = BigRational::zero();
            for &alpha in &os.o {
                for (k, &j) in c.parabolic.h_lambda().iter().enumerate() {
                    total += &lambda[k] * to_big(crate::Q::from_integer(sys.pairing(alpha, sys.simple(j)) as i64));
                }
            }
            let twice = total * BigRational::from_integer(2.into());
            (twice.is_integer() && !twice.is_negative()).then(|| twice.to_integer().try_into().ok()).flatten()
        });

    let polynomial = (size <= POLYNOMIAL_LIMIT).then(|| {
        let mut m: Vec<Vec<Poly>> = vec![vec![Vec::new(); size]; size];
        for (i, r) in rows.iter().enumerate() {
            for &(j, n, d) in r {
                let mut p = vec![BigInt::zero(); d as usize + 1];
                p[d as usize] = BigInt::from(n);
                m[i][j] = p;
            }
        }
        let p = poly_det(&m);
        as_monomial(&p).map(|(c, d)| (c, d as u64)).unwrap_or((BigInt::zero(), 0))
    });

    let nonzero = !det.is_zero();
    let scaled_ok = scaled_degree == Some(expected_degree);
    let poly_ok = polynomial.as_ref().is_none_or(|(coef, d)| *coef == det && *d == expected_degree);
    let monomial_ok = nonzero && scaled_ok && poly_ok;
    Ok(NondegeneracyReport {
        ok: nonzero && size.is_multiple_of(2) && monomial_ok,
        size,
        det,
        expected_degree,
        scaled_degree,
        polynomial,
        monomial_ok,
    })
}
