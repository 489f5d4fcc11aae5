use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::One;

use crate::chevalley::{PMinusBasis, StructureTable};
use crate::construction::Candidate;
use crate::linalg::{sparse_rank, to_big, SparseVec};
use crate::rootsys::RootId;
use crate::Result;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularityReport {
    pub ok: bool,
    pub dim_p: usize,
    /// `dim (ad p⁻) y`.
    pub rank: usize,
    pub t_size: usize,
    /// Rank once `g_T` is appended; must be `dim p`.
    pub augmented_rank: usize,
    /// For E6: every `x_β`, `β ∈ T*`, lies in `(ad p⁻) y + g_T`.
    pub t_star_ok: bool,
}

/// Column layout of p*: the roots of Δ⁺ ⊔ Δ⁻_{π′} then the values on the
/// coroots of h_Λ.
struct Columns {
    root_col: BTreeMap<RootId, usize>,
    n: usize,
}

impl Columns {
    fn new(c: &Candidate) -> Self {
        let root_col: BTreeMap<RootId, usize> =
            c.parabolic.dual_roots().into_iter().enumerate().map(|(k, r)| (r, k)).collect();
        let n = root_col.len() + c.parabolic.h_lambda().len();
        Columns { root_col, n }
    }

    fn unit(&self, r: RootId) -> SparseVec {
        SparseVec::from([(self.root_col[&r], BigRational::one())])
    }
}

/// `(ad b) y` for every basis vector `b` of p⁻, as sparse rows over p*.
pub fn coadjoint_rows(c: &Candidate, table: &StructureTable) -> Result<(Vec<SparseVec>, usize)> {
    let cols = Columns::new(c);
    let par = &*c.parabolic;
    let y = c.y();
    let basis = par
        .minus_roots()
        .into_iter()
        .map(PMinusBasis::Root)
        .chain(par.h_lambda().iter().map(|&j| PMinusBasis::Coroot(j)));
    let mut rows = Vec::new();
    for b in basis {
        let d = table.ad_on_dual(par, b, &y)?;
        let mut row = SparseVec::new();
        for (r, v) in d.roots {
            row.insert(cols.root_col[&r], to_big(v));
        }
        for (k, v) in d.cartan.into_iter().enumerate() {
            if v != crate::Q::from_integer(0) {
                row.insert(cols.root_col.len() + k, to_big(v));
            }
        }
        rows.push(row);
    }
    Ok((rows, cols.n))
}

pub fn check_regularity(c: &Candidate, table: &StructureTable) -> Result<RegularityReport> {
    let cols = Columns::new(c);
    let (rows, n) = coadjoint_rows(c, table)?;
    let rank = sparse_rank(rows.clone(), n);
    let mut with_t = rows;
    with_t.extend(c.t_listed.iter().map(|&r| cols.unit(r)));
    let augmented_rank = sparse_rank(with_t.clone(), n);
    let t_star_ok = c.t_star.iter().all(|&b| {
        let mut m = with_t.clone();
        m.push(cols.unit(b));
        sparse_rank(m, n) == augmented_rank
    });
    let t_size = c.t_listed.len();
    Ok(RegularityReport {
        ok: rank + t_size == n && augmented_rank == n && t_star_ok,
        dim_p: n,
        rank,
        t_size,
        augmented_rank,
        t_star_ok,
    })
}
