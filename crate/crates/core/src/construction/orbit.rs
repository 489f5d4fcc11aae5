use std::collections::{BTreeMap, BTreeSet};

use super::Candidate;
use crate::rootsys::RootId;
use crate::{Error, Result};

/// `O = ⊔ Γ⁰_γ` with its involution θ and the sets `S_α`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitStructure {
    pub o: BTreeSet<RootId>,
    pub o_plus: BTreeSet<RootId>,
    pub o_minus: BTreeSet<RootId>,
    pub o_mixed: BTreeSet<RootId>,
    pub theta: BTreeMap<RootId, RootId>,
    pub s_alpha: BTreeMap<RootId, BTreeSet<RootId>>,
    pub centre_of: BTreeMap<RootId, RootId>,
}

impl OrbitStructure {
    pub fn theta(&self, a: RootId) -> RootId {
        self.theta[&a]
    }

    /// `|S_α|`, i.e. the `n` with `α ∈ O_n`.
    pub fn stratum(&self, a: RootId) -> usize {
        self.s_alpha[&a].len()
    }
}

pub fn orbit_structure(c: &Candidate) -> Result<OrbitStructure> {
    let sys = c.system();
    let s_set = c.s_set();
    let [sp, sm, _] = c.labels();
    let mut out = OrbitStructure {
        o: BTreeSet::new(),
        o_plus: BTreeSet::new(),
        o_minus: BTreeSet::new(),
        o_mixed: BTreeSet::new(),
        theta: BTreeMap::new(),
        s_alpha: BTreeMap::new(),
        centre_of: BTreeMap::new(),
    };
    for (&g, set) in &c.gamma_sets {
        for &a in set.iter().filter(|&&a| a != g) {
            let partner = sys.sub(g, a).filter(|p| *p != g && set.contains(p)).ok_or_else(|| {
                Error::Malformed(format!("{} has no partner in Γ of {}", sys.format_root(a), sys.format_root(g)))
            })?;
            if !out.o.insert(a) {
                return Err(Error::Malformed(format!("{} lies in two Heisenberg sets", sys.format_root(a))));
            }
            out.theta.insert(a, partner);
            out.centre_of.insert(a, g);
            if sp.contains(&g) {
                out.o_plus.insert(a);
            } else if sm.contains(&g) {
                out.o_minus.insert(a);
            } else {
                out.o_mixed.insert(a);
            }
        }
    }
    for &a in &out.o {
        let set = out.o.iter().copied().filter(|&b| sys.add(a, b).is_some_and(|g| s_set.contains(&g))).collect();
        out.s_alpha.insert(a, set);
    }
    Ok(out)
}
