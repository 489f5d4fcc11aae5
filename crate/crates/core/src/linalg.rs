//! Exact linear algebra.
//!
//! Small dense systems (Cartan matrices, the `S|h_Λ` matrix) use `Q`; the
//! large sparse matrices of the regularity and non-degeneracy checks use
//! arbitrary-precision rationals with Markowitz pivoting, which keeps
//! fill-in low on these very sparse matrices.

use std::collections::{BTreeMap, BTreeSet};
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, One, Zero};

use crate::Q;

/// Dense row reduction on a copy of `a`, applying the same operations to
/// `rhs`; returns the determinant, or `None` when singular.
fn reduce<T>(a: &[Vec<T>], rhs: &mut [Vec<T>]) -> Option<T>
where
    T: Clone + Num + Neg<Output = T>,
{
    let n = a.len();
    let mut m: Vec<Vec<T>> = a.to_vec();
    let mut det = T::one();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        if piv != col {
            m.swap(piv, col);
            rhs.swap(piv, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det = det * p.clone();
        let pivot_row = m[col].clone();
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone() / p.clone();
            for (x, y) in m[r][col..].iter_mut().zip(&pivot_row[col..]) {
                *x = x.clone() - f.clone() * y.clone();
            }
            let pivot_rhs = rhs[col].clone();
            for (x, y) in rhs[r].iter_mut().zip(pivot_rhs) {
                *x = x.clone() - f.clone() * y;
            }
        }
    }
    for (r, row) in rhs.iter_mut().enumerate() {
        let p = m[r][r].clone();
        for x in row.iter_mut() {
            *x = x.clone() / p.clone();
        }
    }
    Some(det)
}

/// Determinant of a small square matrix.
pub fn det(a: &[Vec<Q>]) -> Q {
    let mut empty = vec![Vec::new(); a.len()];
    reduce(a, &mut empty).unwrap_or_else(Q::zero)
}

/// Unique solution of `a x = b`, or `None` if `a` is singular.
pub fn solve(a: &[Vec<Q>], b: &[Q]) -> Option<Vec<Q>> {
    let mut rhs: Vec<Vec<Q>> = b.iter().map(|&x| vec![x]).collect();
    reduce(a, &mut rhs)?;
    Some(rhs.into_iter().map(|r| r[0]).collect())
}

pub fn inverse(a: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = a.len();
    let mut rhs: Vec<Vec<Q>> =
        (0..n).map(|i| (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect()).collect();
    reduce(a, &mut rhs)?;
    Some(rhs)
}

/// `solve` over arbitrary-precision rationals.
pub fn solve_big(a: &[Vec<BigRational>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let mut rhs: Vec<Vec<BigRational>> = b.iter().map(|x| vec![x.clone()]).collect();
    reduce(a, &mut rhs)?;
    Some(rhs.into_iter().map(|mut r| r.remove(0)).collect())
}

/// Back to a small rational, if it fits.
pub fn from_big(q: &BigRational) -> Option<Q> {
    use num_traits::ToPrimitive;
    Some(Q::new(q.numer().to_i64()?, q.denom().to_i64()?))
}

pub fn to_big(q: Q) -> BigRational {
    BigRational::new(BigInt::from(*q.numer()), BigInt::from(*q.denom()))
}

pub type SparseVec = BTreeMap<usize, BigRational>;

/// Result of sparse Gaussian elimination.
#[derive(Debug, Clone)]
pub struct Elimination {
    pub rank: usize,
    /// Determinant when the matrix is square; zero when rank deficient.
    pub det: Option<BigRational>,
}

/// Eliminates a sparse matrix given by rows over `ncols` columns.
pub fn eliminate(rows: Vec<SparseVec>, ncols: usize) -> Elimination {
    let nrows = rows.len();
    let mut rows: Vec<Option<SparseVec>> =
        rows.into_iter().map(|r| Some(r.into_iter().filter(|(_, v)| !v.is_zero()).collect())).collect();
    let mut cols: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); ncols];
    for (r, row) in rows.iter().enumerate() {
        for &c in row.as_ref().unwrap().keys() {
            cols[c].insert(r);
        }
    }
    let mut pivots: Vec<(usize, usize, BigRational)> = Vec::new();
    loop {
        let mut best: Option<(usize, usize, usize)> = None;
        for (c, set) in cols.iter().enumerate() {
            if set.is_empty() {
                continue;
            }
            for &r in set {
                let len = rows[r].as_ref().unwrap().len();
                let cost = (len - 1) * (set.len() - 1);
                if best.is_none_or(|(b, _, _)| cost < b) {
                    best = Some((cost, r, c));
                }
            }
            if matches!(best, Some((0, _, _))) {
                break;
            }
        }
        let Some((_, pr, pc)) = best else { break };
        let prow = rows[pr].take().unwrap();
        for &c in prow.keys() {
            cols[c].remove(&pr);
        }
        let p = prow[&pc].clone();
        let targets: Vec<usize> = cols[pc].iter().copied().collect();
        for r in targets {
            let row = rows[r].as_mut().unwrap();
            let f = &row[&pc] / &p;
            for (&c, v) in &prow {
                let entry = row.entry(c).or_insert_with(BigRational::zero);
                let was_zero = entry.is_zero();
                *entry -= &f * v;
                if entry.is_zero() {
                    row.remove(&c);
                    if !was_zero {
                        cols[c].remove(&r);
                    }
                } else if was_zero {
                    cols[c].insert(r);
                }
            }
        }
        pivots.push((pr, pc, p));
    }
    let rank = pivots.len();
    let det = (nrows == ncols).then(|| {
        if rank < nrows {
            return BigRational::zero();
        }
        let mut perm = vec![0usize; nrows];
        let mut prod = BigRational::one();
        for (r, c, p) in &pivots {
            perm[*r] = *c;
            prod *= p;
        }
        if permutation_is_odd(&perm) {
            -prod
        } else {
            prod
        }
    });
    Elimination { rank, det }
}

fn permutation_is_odd(perm: &[usize]) -> bool {
    let mut seen = vec![false; perm.len()];
    let mut transpositions = 0;
    for start in 0..perm.len() {
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        if len > 0 {
            transpositions += len - 1;
        }
    }
    transpositions % 2 == 1
}

pub fn sparse_rank(rows: Vec<SparseVec>, ncols: usize) -> usize {
    eliminate(rows, ncols).rank
}

/// Fraction-free (Bareiss) determinant of a dense integer matrix.
pub fn bareiss_det(a: &[Vec<BigInt>]) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m = a.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Polynomials in one variable with integer coefficients, lowest degree first.
pub type Poly = Vec<BigInt>;

fn poly_trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    poly_trim(out)
}

fn poly_sub(a: &Poly, b: &Poly) -> Poly {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    poly_trim(out)
}

/// Exact division; panics if `d` does not divide `a` over ℤ[t].
fn poly_div_exact(a: &Poly, d: &Poly) -> Poly {
    let mut rem = a.clone();
    if rem.is_empty() {
        return rem;
    }
    let dl = d.len();
    assert!(dl > 0 && rem.len() >= dl, "inexact polynomial division");
    let lead = d.last().unwrap();
    let mut q = vec![BigInt::zero(); rem.len() - dl + 1];
    for k in (0..q.len()).rev() {
        let c = &rem[k + dl - 1];
        if c.is_zero() {
            continue;
        }
        assert!((c % lead).is_zero(), "inexact polynomial division");
        let f = c / lead;
        for (j, dj) in d.iter().enumerate() {
            rem[k + j] -= &f * dj;
        }
        q[k] = f;
    }
    assert!(rem.iter().all(|c| c.is_zero()), "inexact polynomial division");
    poly_trim(q)
}

/// Bareiss determinant over ℤ[t].
pub fn poly_det(a: &[Vec<Poly>]) -> Poly {
    let n = a.len();
    if n == 0 {
        return vec![BigInt::one()];
    }
    let mut m: Vec<Vec<Poly>> = a.iter().map(|r| r.iter().cloned().map(poly_trim).collect()).collect();
    let mut negate = false;
    let mut prev: Poly = vec![BigInt::one()];
    for k in 0..n - 1 {
        if m[k][k].is_empty() {
            match (k + 1..n).find(|&r| !m[r][k].is_empty()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return Vec::new(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = poly_sub(&poly_mul(&m[i][j], &m[k][k]), &poly_mul(&m[i][k], &m[k][j]));
                m[i][j] = poly_div_exact(&num, &prev);
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        d.into_iter().map(|c| -c).collect()
    } else {
        d
    }
}

/// `(coefficient, degree)` if `p` is a single nonzero monomial.
pub fn as_monomial(p: &Poly) -> Option<(BigInt, usize)> {
    let nonzero: Vec<usize> = (0..p.len()).filter(|&i| !p[i].is_zero()).collect();
    (nonzero.len() == 1).then(|| (p[nonzero[0]].clone(), nonzero[0]))
}
