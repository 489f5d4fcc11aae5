//! Which (family, rank, s) triples the toolkit constructs, and why the
//! others are excluded.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::rootsys::Family;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CaseId {
    pub family: Family,
    pub rank: usize,
    /// Removed simple root, 1-based Bourbaki numbering.
    pub s: usize,
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::B | Family::D => write!(f, "{}{} s={}", self.family, self.rank, self.s),
            _ => write!(f, "{} s={}", self.family, self.s),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseKind {
    /// B_n, s even, 2 ≤ s ≤ n.
    B,
    /// D_n, s even, 2 ≤ s ≤ n−2.
    D,
    /// D_n, n even ≥ 6, s = n.
    DExtremal,
    /// D_n, n even ≥ 6, s = n−1: image of the s = n case under α_{n−1} ↔ α_n.
    DExtremalSwapped,
    E6,
    /// E6, s = 1: image of the s = 6 case under the diagram flip.
    E6Flipped,
    E7,
}

const PRIOR: &str =
    "the lower and upper character bounds already coincide there, so polynomiality is covered by earlier work";

impl CaseId {
    pub fn new(family: Family, rank: usize, s: usize) -> Self {
        CaseId { family, rank, s }
    }

    /// File-name friendly identifier, e.g. `B06_s4` or `E7_s3`.
    pub fn slug(&self) -> String {
        match self.family {
            Family::B | Family::D => format!("{}{:02}_s{}", self.family, self.rank, self.s),
            _ => format!("{}_s{}", self.family, self.s),
        }
    }

    pub fn kind(&self) -> Result<CaseKind> {
        let (n, s) = (self.rank, self.s);
        let out = |why: String| Err(Error::OutOfScope(format!("{self} is out of scope: {why}")));
        match self.family {
            Family::B if n < 2 => out("type B needs rank ≥ 2".into()),
            Family::D if n < 4 => out("type D needs rank ≥ 4".into()),
            Family::E6 if n != 6 => out("E6 has rank 6".into()),
            Family::E7 if n != 7 => out("E7 has rank 7".into()),
            _ if s == 0 || s > n => out(format!("s must lie in 1..={n}")),
            Family::B if s % 2 == 0 => Ok(CaseKind::B),
            Family::B => out(format!("s is odd; {PRIOR}")),
            Family::D if s % 2 == 0 && s + 2 <= n => Ok(CaseKind::D),
            Family::D if s == n && n % 2 == 0 && n >= 6 => Ok(CaseKind::DExtremal),
            Family::D if s + 1 == n && n % 2 == 0 && n >= 6 => Ok(CaseKind::DExtremalSwapped),
            Family::D if n == 4 && s >= 3 => {
                out("D4 with s ∈ {3, 4} is excluded from the extremal construction, which needs n ≥ 6".into())
            }
            Family::D if s >= n - 1 => out(format!("n is odd; {PRIOR}")),
            Family::D => out(format!("s is odd; {PRIOR}")),
            Family::E6 if s == 6 => Ok(CaseKind::E6),
            Family::E6 if s == 1 => Ok(CaseKind::E6Flipped),
            Family::E6 => out(format!("only s ∈ {{1, 6}} are new for E6; {PRIOR} or an adapted pair is already known")),
            Family::E7 if s == 3 => Ok(CaseKind::E7),
            Family::E7 => out("only s = 3 is constructed for E7".into()),
        }
    }

    pub fn in_scope(&self) -> bool {
        self.kind().is_ok()
    }
}

/// Every in-scope case with rank ≤ `max_rank`, in a fixed order.
pub fn cases_up_to(max_rank: usize) -> Vec<CaseId> {
    let mut out = Vec::new();
    for n in 2..=max_rank {
        for s in 1..=n {
            let c = CaseId::new(Family::B, n, s);
            if c.in_scope() {
                out.push(c);
            }
        }
    }
    for n in 4..=max_rank {
        for s in 1..=n {
            let c = CaseId::new(Family::D, n, s);
            if c.in_scope() {
                out.push(c);
            }
        }
    }
    if max_rank >= 6 {
        out.push(CaseId::new(Family::E6, 6, 1));
        out.push(CaseId::new(Family::E6, 6, 6));
    }
    if max_rank >= 7 {
        out.push(CaseId::new(Family::E7, 7, 3));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scope_rules() {
        assert!(!CaseId::new(Family::B, 5, 3).in_scope());
        assert!(CaseId::new(Family::B, 2, 2).in_scope());
        assert!(CaseId::new(Family::D, 4, 2).in_scope());
        assert!(!CaseId::new(Family::D, 4, 4).in_scope());
        assert!(!CaseId::new(Family::D, 7, 7).in_scope());
        assert_eq!(CaseId::new(Family::D, 8, 7).kind().unwrap(), CaseKind::DExtremalSwapped);
        assert!(!CaseId::new(Family::E7, 7, 2).in_scope());
    }

    #[test]
    fn sweep_four() {
        let cases = cases_up_to(4);
        for (f, n, s) in [(Family::B, 2, 2), (Family::B, 4, 2), (Family::B, 4, 4), (Family::D, 4, 2)] {
            assert!(cases.contains(&CaseId::new(f, n, s)));
        }
    }
}
