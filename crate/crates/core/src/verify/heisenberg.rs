use std::collections::{BTreeMap, BTreeSet};

use crate::construction::Candidate;
use crate::rootsys::RootId;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct HeisenbergReport {
    pub ok: bool,
    pub failures: Vec<String>,
}

/// Each `Γ_γ` contains γ, pairs every other element with a unique partner
/// summing to γ, and lies in Δ⁺ ⊔ Δ⁻_{π′}; the sets are pairwise disjoint.
pub fn check_heisenberg(c: &Candidate) -> HeisenbergReport {
    let sys = c.system();
    let par = &c.parabolic;
    let mut failures = Vec::new();
    let mut owner: BTreeMap<RootId, RootId> = BTreeMap::new();
    for (&g, set) in &c.gamma_sets {
        let name = sys.format_root(g);
        if !set.contains(&g) {
            failures.push(format!("Γ of {name} does not contain its centre"));
        }
        for &a in set {
            if !par.in_p_dual(a) {
                failures.push(format!("{} in Γ of {name} lies outside Δ⁺ ⊔ Δ⁻_π′", sys.format_root(a)));
            }
            if let Some(prev) = owner.insert(a, g) {
                failures.push(format!(
                    "{} lies in both Γ of {} and Γ of {name}",
                    sys.format_root(a),
                    sys.format_root(prev)
                ));
            }
            if a == g {
                continue;
            }
            let partners: Vec<RootId> = set.iter().copied().filter(|&b| b != g && sys.add(a, b) == Some(g)).collect();
            if partners.len() != 1 || partners[0] == a {
                failures.push(format!("{} has {} partners in Γ of {name}", sys.format_root(a), partners.len()));
            }
        }
    }
    HeisenbergReport { ok: failures.is_empty(), failures }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionReport {
    pub ok: bool,
    pub derived_t: BTreeSet<RootId>,
    /// Listed in T but covered elsewhere (or not in Δ⁺ ⊔ Δ⁻_{π′}).
    pub unexpected: BTreeSet<RootId>,
    /// Left uncovered but not listed in T.
    pub missing: BTreeSet<RootId>,
    pub t_star_overlap: bool,
}

/// `Δ⁺ ⊔ Δ⁻_{π′} = Γ ⊔ T ⊔ T*` with T the listed complement.
pub fn check_partition(c: &Candidate) -> PartitionReport {
    let derived_t = c.derive_t();
    let gamma: BTreeSet<RootId> = c.gamma_sets.values().flatten().copied().collect();
    let t_star_overlap =
        c.t_star.iter().any(|r| gamma.contains(r) || c.t_listed.contains(r) || !c.parabolic.in_p_dual(*r));
    let unexpected: BTreeSet<RootId> = c.t_listed.difference(&derived_t).copied().collect();
    let missing: BTreeSet<RootId> = derived_t.difference(&c.t_listed).copied().collect();
    PartitionReport {
        ok: unexpected.is_empty() && missing.is_empty() && !t_star_overlap,
        derived_t,
        unexpected,
        missing,
        t_star_overlap,
    }
}
