//! Self-checks of the underlying machinery: the Jacobi identity and the
//! root-string law for the structure constants, and rigidity of the
//! involution θ on stationary roots.

use std::collections::{BTreeMap, BTreeSet};

use crate::chevalley::{Elem, StructureTable};
use crate::construction::{orbit_structure, Candidate};
use crate::rootsys::RootId;
use crate::verify::stationary_sets;
use crate::Result;

/// `[x,[y,z]] + [y,[z,x]] + [z,[x,y]]` for three root vectors.
pub fn jacobiator(table: &StructureTable, a: RootId, b: RootId, c: RootId) -> Elem {
    let dim = table.system().dim;
    let (x, y, z) = (Elem::root_vector(dim, a), Elem::root_vector(dim, b), Elem::root_vector(dim, c));
    let mut out = table.bracket(&x, &table.bracket(&y, &z));
    out.add_scaled(1.into(), &table.bracket(&y, &table.bracket(&z, &x)));
    out.add_scaled(1.into(), &table.bracket(&z, &table.bracket(&x, &y)));
    out
}

/// Triples among `triples` violating the Jacobi identity.
pub fn jacobi_defects(
    table: &StructureTable,
    triples: impl IntoIterator<Item = (RootId, RootId, RootId)>,
) -> Vec<(RootId, RootId, RootId)> {
    triples.into_iter().filter(|&(a, b, c)| !jacobiator(table, a, b, c).is_zero()).collect()
}

/// Every ordered triple of roots.
pub fn all_triples(n: usize) -> impl Iterator<Item = (RootId, RootId, RootId)> {
    (0..n).flat_map(move |a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c))))
}

/// `p` with `β − pα, …, β` the part of the α-string through β below β.
fn string_depth(table: &StructureTable, a: RootId, b: RootId) -> i32 {
    let sys = table.system();
    let mut p = 0;
    let mut cur = b;
    while let Some(next) = sys.sub(cur, a) {
        p += 1;
        cur = next;
    }
    p
}

/// Pairs `(α, β)` with `β ≠ ±α` where `|N_{α,β}|` is not `p + 1` when
/// `α + β` is a root, or not zero otherwise.
pub fn string_law_defects(table: &StructureTable) -> Vec<(RootId, RootId)> {
    let sys = table.system();
    let mut out = Vec::new();
    for a in 0..sys.len() {
        for b in 0..sys.len() {
            if a == b || sys.neg(a) == b {
                continue;
            }
            let n = table.n(a, b);
            let want = if sys.add(a, b).is_some() { string_depth(table, a, b) + 1 } else { 0 };
            if n.abs() != want {
                out.push((a, b));
            }
        }
    }
    out
}

/// All permutations ϑ of O with `γ + ϑ(γ) ∈ S` for every γ, stopping after
/// `limit` of them.
pub fn admissible_permutations(c: &Candidate, limit: usize) -> Result<Vec<BTreeMap<RootId, RootId>>> {
    let os = orbit_structure(c)?;
    let order: Vec<RootId> = {
        let mut v: Vec<RootId> = os.o.iter().copied().collect();
        v.sort_by_key(|a| (os.stratum(*a), *a));
        v
    };
    let mut out = Vec::new();
    let mut current = BTreeMap::new();
    let mut used = BTreeSet::new();
    search(&os.s_alpha, &order, 0, &mut current, &mut used, &mut out, limit);
    Ok(out)
}

fn search(
    s_alpha: &BTreeMap<RootId, BTreeSet<RootId>>,
    order: &[RootId],
    k: usize,
    current: &mut BTreeMap<RootId, RootId>,
    used: &mut BTreeSet<RootId>,
    out: &mut Vec<BTreeMap<RootId, RootId>>,
    limit: usize,
) {
    if out.len() >= limit {
        return;
    }
    let Some(&a) = order.get(k) else {
        out.push(current.clone());
        return;
    };
    for &b in &s_alpha[&a] {
        if used.insert(b) {
            current.insert(a, b);
            search(s_alpha, order, k + 1, current, used, out, limit);
            current.remove(&a);
            used.remove(&b);
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RigidityReport {
    pub permutations: usize,
    /// Whether enumeration stopped at the limit.
    pub truncated: bool,
    pub stationary: usize,
    /// `(ϑ index, root)` where ϑ differs from θ on some `A_α ∪ A_θ(α)`.
    pub violations: Vec<(usize, RootId)>,
}

/// Every admissible ϑ agrees with θ on `A_α ∪ A_θ(α)` for stationary α.
pub fn rigidity(c: &Candidate, limit: usize) -> Result<RigidityReport> {
    let os = orbit_structure(c)?;
    let sets = stationary_sets(c.system(), &os, c.criterion);
    let perms = admissible_permutations(c, limit)?;
    let mut violations = Vec::new();
    for (k, p) in perms.iter().enumerate() {
        for set in sets.values() {
            for &r in set {
                if p[&r] != os.theta(r) {
                    violations.push((k, r));
                }
            }
        }
    }
    violations.sort();
    violations.dedup();
    Ok(RigidityReport {
        permutations: perms.len(),
        truncated: perms.len() >= limit,
        stationary: sets.len(),
        violations,
    })
}
