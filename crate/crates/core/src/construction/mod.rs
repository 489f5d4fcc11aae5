//! The candidate data of each case: the set `S`, its Heisenberg sets `Γ_γ`,
//! the complement `T` (and `T*` for E6), transcribed as generators in
//! `(n, s)`.

mod classical;
pub mod closed_forms;
mod exceptional;
mod orbit;

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use crate::cascade::{kostant_cascade, Cascade};
use crate::chevalley::Elem;
use crate::parabolic::ParabolicData;
use crate::rootsys::{RootId, RootSystem};
use crate::scope::{CaseId, CaseKind};
use crate::{Error, Result, Q};

pub use orbit::{orbit_structure, OrbitStructure};

/// Which non-degeneracy criterion the case is checked against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Criterion {
    /// Stationary / cyclic roots.
    Basic,
    /// Extended stationary / extended cyclic roots with condition (*).
    Extended,
}

#[derive(Debug, Clone)]
pub struct Candidate {
    pub case: CaseId,
    pub parabolic: Arc<ParabolicData>,
    /// Heisenberg sets keyed by their centre; the keys form `S`.
    pub gamma_sets: BTreeMap<RootId, BTreeSet<RootId>>,
    /// The explicitly listed complement.
    pub t_listed: BTreeSet<RootId>,
    pub t_star: BTreeSet<RootId>,
    /// `(S⁺, S⁻, S^m)` when the construction states the split.
    pub stated_split: Option<[BTreeSet<RootId>; 3]>,
    pub criterion: Criterion,
}

impl Candidate {
    pub fn system(&self) -> &RootSystem {
        self.parabolic.system()
    }

    pub fn s_set(&self) -> BTreeSet<RootId> {
        self.gamma_sets.keys().copied().collect()
    }

    /// `y = Σ_{γ∈S} x_γ`.
    pub fn y(&self) -> Elem {
        let mut y = Elem::zero(self.system().dim);
        for &g in self.gamma_sets.keys() {
            y.add_root(g, Q::from_integer(1));
        }
        y
    }

    /// `(S⁺, S⁻, S^m)` read off from the contents of each `Γ_γ`.
    pub fn split(&self) -> [BTreeSet<RootId>; 3] {
        let sys = self.system();
        let mut out: [BTreeSet<RootId>; 3] = Default::default();
        for (&g, set) in &self.gamma_sets {
            let pos = set.iter().all(|&r| sys.is_positive(r));
            let neg = set.iter().all(|&r| self.parabolic.levi_negative.contains(&r));
            out[if pos {
                0
            } else if neg {
                1
            } else {
                2
            }]
            .insert(g);
        }
        out
    }

    /// The labels used by the non-degeneracy criterion: the stated split if
    /// there is one, else the one read off from the sets.
    pub fn labels(&self) -> [BTreeSet<RootId>; 3] {
        self.stated_split.clone().unwrap_or_else(|| self.split())
    }

    /// Stated labels are sound when every set labelled ± is one-signed of
    /// that sign and every two-signed set is labelled mixed. A one-signed
    /// set may still be labelled mixed; it is then handled by the stricter
    /// mixed analysis. Returns the roots labelled mixed whose set is
    /// one-signed, or `None` if the labels are unsound.
    pub fn check_labels(&self) -> Option<BTreeSet<RootId>> {
        let [cp, cm, cx] = self.split();
        let [lp, lm, lx] = self.labels();
        (lp.is_subset(&cp) && lm.is_subset(&cm) && cx.is_subset(&lx)).then(|| lx.difference(&cx).copied().collect())
    }

    /// `T = (Δ⁺ ⊔ Δ⁻_{π′}) ∖ (Γ ⊔ T*)`.
    pub fn derive_t(&self) -> BTreeSet<RootId> {
        let used: BTreeSet<RootId> =
            self.gamma_sets.values().flatten().copied().chain(self.t_star.iter().copied()).collect();
        self.parabolic.dual_roots().into_iter().filter(|r| !used.contains(r)).collect()
    }

    pub fn check_t_against_listed(&self) -> bool {
        self.derive_t() == self.t_listed
    }

    /// Applies a diagram automorphism (a permutation of simple indices) to
    /// every root of the candidate, landing in the parabolic for `case`.
    fn permuted(&self, perm: &[usize], case: CaseId) -> Result<Candidate> {
        let sys = self.parabolic.system_arc();
        let map = |r: RootId| -> Result<RootId> {
            let c = sys.coeffs(r);
            let mut out = vec![0; c.len()];
            for (k, &a) in c.iter().enumerate() {
                out[perm[k]] = a;
            }
            sys.root_from_coeffs(&out)
        };
        let map_set = |set: &BTreeSet<RootId>| set.iter().map(|&r| map(r)).collect::<Result<BTreeSet<_>>>();
        let mut gamma_sets = BTreeMap::new();
        for (&g, set) in &self.gamma_sets {
            gamma_sets.insert(map(g)?, map_set(set)?);
        }
        let stated_split = match &self.stated_split {
            Some([a, b, c]) => Some([map_set(a)?, map_set(b)?, map_set(c)?]),
            None => None,
        };
        Ok(Candidate {
            case,
            parabolic: Arc::new(ParabolicData::new(sys.clone(), case.s)?),
            gamma_sets,
            t_listed: map_set(&self.t_listed)?,
            t_star: map_set(&self.t_star)?,
            stated_split,
            criterion: self.criterion,
        })
    }
}

/// Cascade of Δ⁺ and of Δ⁺_{π′}.
pub fn cascades(par: &ParabolicData) -> (Cascade, Cascade) {
    let sys = par.system();
    let pos: BTreeSet<RootId> = sys.positive_roots().into_iter().collect();
    (kostant_cascade(sys, &pos), kostant_cascade(sys, &par.levi_positive))
}

pub fn build_case(case: CaseId) -> Result<Candidate> {
    let kind = case.kind()?;
    let sys = Arc::new(RootSystem::new(case.family, case.rank)?);
    match kind {
        CaseKind::B => classical::type_b(sys, case),
        CaseKind::D => classical::type_d(sys, case),
        CaseKind::DExtremal => classical::type_d_extremal(sys, case),
        CaseKind::DExtremalSwapped => {
            let n = case.rank;
            let base = classical::type_d_extremal(sys, CaseId::new(case.family, n, n))?;
            let mut perm: Vec<usize> = (0..n).collect();
            perm.swap(n - 2, n - 1);
            base.permuted(&perm, case)
        }
        CaseKind::E6 => exceptional::e6(sys, case),
        CaseKind::E6Flipped => {
            let base = exceptional::e6(sys, CaseId::new(case.family, 6, 6))?;
            base.permuted(&[5, 1, 4, 3, 2, 0], case)
        }
        CaseKind::E7 => exceptional::e7(sys, case),
    }
}

/// Incremental builder of Heisenberg sets in ε-notation with signed 1-based
/// indices: `(i, 1)` is ε_i, `(i, -1)` is −ε_i.
pub(crate) struct Sets<'a> {
    pub sys: &'a RootSystem,
    pub gamma: BTreeMap<RootId, BTreeSet<RootId>>,
}

impl<'a> Sets<'a> {
    pub fn new(sys: &'a RootSystem) -> Self {
        Sets { sys, gamma: BTreeMap::new() }
    }

    pub fn r(&self, terms: &[(i64, i64)]) -> Result<RootId> {
        let mut t = Vec::with_capacity(terms.len());
        for &(i, c) in terms {
            if i < 1 {
                return Err(Error::NotARoot(format!("ε index {i}")));
            }
            t.push((i as usize, c));
        }
        self.sys.eps(&t)
    }

    /// ε_i − ε_j
    pub fn d(&self, i: i64, j: i64) -> Result<RootId> {
        self.r(&[(i, 1), (j, -1)])
    }

    /// ε_i + ε_j
    pub fn p(&self, i: i64, j: i64) -> Result<RootId> {
        self.r(&[(i, 1), (j, 1)])
    }

    /// −ε_i − ε_j
    pub fn m(&self, i: i64, j: i64) -> Result<RootId> {
        self.r(&[(i, -1), (j, -1)])
    }

    pub fn e(&self, i: i64) -> Result<RootId> {
        self.r(&[(i, 1)])
    }

    pub fn ne(&self, i: i64) -> Result<RootId> {
        self.r(&[(i, -1)])
    }

    pub fn used(&self) -> BTreeSet<RootId> {
        self.gamma.values().flatten().copied().collect()
    }

    /// Inserts `Γ_centre = {centre} ∪ members`.
    pub fn insert(&mut self, centre: RootId, members: impl IntoIterator<Item = Result<RootId>>) -> Result<()> {
        let mut set = BTreeSet::from([centre]);
        for m in members {
            set.insert(m?);
        }
        if self.gamma.insert(centre, set).is_some() {
            return Err(Error::SizeMismatch(format!(
                "two Heisenberg sets centred at {}",
                self.sys.format_root(centre)
            )));
        }
        Ok(())
    }
}

/// Inclusive integer range, empty when `hi < lo`.
pub(crate) fn span(lo: i64, hi: i64) -> impl Iterator<Item = i64> + Clone {
    lo..=hi
}
