//! Closed forms the computed data is compared against: eigenvalues of ad h
//! on g_T, the lower-bound multiplicities and, for the exceptional cases,
//! the element h itself.

use crate::rootsys::Family;
use crate::scope::{CaseId, CaseKind};
use crate::{Result, Q};

/// The complement T of the E7 case, in simple-root coefficients.
pub const E7_T: [[i32; 7]; 5] = [
    [-1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 1, 0, 0],
    [0, 0, 1, 1, 0, 0, 0],
    [0, -1, 0, -1, -1, -1, -1],
    [0, 0, 0, 0, 0, -1, 0],
];

fn range(lo: i64, hi: i64) -> impl Iterator<Item = i64> {
    lo..=hi
}

/// Eigenvalues of the A-chain part shared by types B and D.
fn chain_part(s: i64) -> Vec<i64> {
    let h = s / 2;
    let mut out: Vec<i64> = range(1, s / 4).map(|i| s + 4 * i - 1).collect();
    out.extend(range(s / 4 + 1, h - 1).map(|i| 3 * s - 4 * i + 1));
    out
}

/// Sorted multiset `{γ(h) : γ ∈ T}`.
pub fn eigenvalues(case: CaseId) -> Result<Vec<i64>> {
    let (n, s) = (case.rank as i64, case.s as i64);
    let h = s / 2;
    let mut out = match case.kind()? {
        CaseKind::B => {
            let mut v = chain_part(s);
            v.extend([h + 1, h - 1]);
            if n > s {
                v.push(s + 1);
                v.extend(range(1, (n - s) / 2).map(|j| s + 4 * j - 1));
                v.extend(range(1, (n - s - 1) / 2).map(|j| s + 4 * j + 1));
            }
            v
        }
        CaseKind::D => {
            let mut v = chain_part(s);
            v.extend([h + 1, h - 1, n - h - 1, s + 1]);
            v.extend(range(1, (n - s - 1) / 2).map(|j| s + 4 * j - 1));
            v.extend(range(1, (n - s - 2) / 2).map(|j| s + 4 * j + 1));
            v
        }
        CaseKind::DExtremal | CaseKind::DExtremalSwapped => {
            let mut v: Vec<i64> = range(1, n / 2 - 3).map(|i| 2 * (n - i) + 1).collect();
            v.extend([n + 5, n / 2 - 1, n / 2 + 1, n / 2 + 3]);
            v
        }
        CaseKind::E6 | CaseKind::E6Flipped => vec![5, 7, 17],
        CaseKind::E7 => vec![2, 5, 7, 9, 17],
    };
    out.sort_unstable();
    Ok(out)
}

/// Sorted multiset of the lower-bound weights `−δ_Γ`, as multiples of ϖ_s.
pub fn lower_bound(case: CaseId) -> Result<Vec<i64>> {
    let (n, s) = (case.rank as i64, case.s as i64);
    let h = s / 2;
    let rep = |pairs: &[(i64, i64)]| -> Vec<i64> {
        pairs.iter().flat_map(|&(w, m)| std::iter::repeat_n(w, m.max(0) as usize)).collect()
    };
    let mut out = match case.kind()? {
        CaseKind::B if n == s => rep(&[(2, 2), (4, n / 2 - 1)]),
        CaseKind::B => rep(&[(1, 2), (2, n - 1 - h)]),
        CaseKind::D => rep(&[(1, 3), (2, n - 2 - h)]),
        CaseKind::DExtremal | CaseKind::DExtremalSwapped => rep(&[(2, 3), (4, n / 2 - 2)]),
        CaseKind::E6 | CaseKind::E6Flipped => rep(&[(3, 2), (6, 1)]),
        CaseKind::E7 => vec![1, 2, 2, 2, 4],
    };
    out.sort_unstable();
    Ok(out)
}

/// h on the coroot basis `α_1∨, …, α_n∨` (the `α_s∨` entry is zero), where
/// it is printed explicitly.
pub fn expected_h(case: CaseId) -> Option<Vec<Q>> {
    let q = |n: i64, d: i64| Q::new(n, d);
    let z = |v: &[i64]| v.iter().map(|&x| Q::from_integer(x)).collect();
    match (case.family, case.s) {
        (Family::E6, 6) => Some(z(&[-2, -1, 1, 6, -5, 0])),
        (Family::E6, 1) => Some(z(&[0, -1, -5, 6, 1, -2])),
        (Family::E7, 3) => Some(vec![q(-1, 1), q(-13, 2), q(0, 1), q(3, 1), q(11, 2), q(-2, 1), q(-1, 2)]),
        _ => None,
    }
}
