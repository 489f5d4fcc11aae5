//! E6 with π′ = π ∖ {α₆} and E7 with π′ = π ∖ {α₃}.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use super::{cascades, classical, Candidate, Criterion};
use crate::cascade::irreducible_components;
use crate::parabolic::ParabolicData;
use crate::rootsys::{RootId, RootSystem};
use crate::scope::CaseId;
use crate::{Error, Result};

fn root(sys: &RootSystem, c: &[i32]) -> Result<RootId> {
    sys.root_from_coeffs(c)
}

fn roots(sys: &RootSystem, cs: &[&[i32]]) -> Result<BTreeSet<RootId>> {
    cs.iter().map(|c| root(sys, c)).collect()
}

fn cascade_set(c: &crate::cascade::Cascade, r: RootId, sys: &RootSystem) -> Result<BTreeSet<RootId>> {
    c.heisenberg(r).cloned().ok_or_else(|| Error::NotARoot(format!("{} is not a cascade root", sys.format_root(r))))
}

pub(super) fn e6(sys: Arc<RootSystem>, case: CaseId) -> Result<Candidate> {
    let par = Arc::new(ParabolicData::new(Arc::clone(&sys), case.s)?);
    let (full, levi) = cascades(&par);
    let s = &*sys;
    let b1 = root(s, &[1, 2, 2, 3, 2, 1])?;
    let b2 = root(s, &[1, 0, 1, 1, 1, 1])?;
    let b3 = root(s, &[0, 0, 1, 1, 1, 0])?;
    let b1_levi = root(s, &[1, 1, 2, 2, 1, 0])?;
    let last = root(s, &[0, 0, 0, -1, -1, 0])?;

    let mut gamma = BTreeMap::new();
    let drop1 = roots(s, &[&[0, 1, 1, 1, 0, 0], &[1, 1, 1, 2, 2, 1]])?;
    gamma.insert(b1, &cascade_set(&full, b1, s)? - &drop1);
    let drop2 = roots(s, &[&[1, 0, 1, 1, 1, 0], &[0, 0, 0, 0, 0, 1]])?;
    gamma.insert(b2, &cascade_set(&full, b2, s)? - &drop2);
    gamma.insert(b3, cascade_set(&full, b3, s)?);
    gamma.insert(s.neg(b1_levi), cascade_set(&levi, b1_levi, s)?.into_iter().map(|r| s.neg(r)).collect());
    gamma.insert(last, BTreeSet::from([last, s.neg(s.simple(3)), s.neg(s.simple(4))]));

    let t_star = roots(
        s,
        &[
            &[1, 1, 1, 2, 2, 1],
            &[1, 0, 1, 1, 1, 0],
            &[-1, 0, 0, 0, 0, 0],
            &[0, -1, 0, 0, 0, 0],
            &[0, -1, 0, -1, 0, 0],
            &[0, -1, 0, -1, -1, 0],
        ],
    )?;
    let t_listed = roots(s, &[&[0, 0, 0, 1, 0, 0], &[0, 0, 0, 0, 0, 1], &[0, 1, 1, 1, 0, 0]])?;
    let split = [BTreeSet::from([b1, b2, b3]), BTreeSet::from([s.neg(b1_levi), last]), BTreeSet::new()];
    Ok(Candidate {
        case,
        parabolic: par,
        gamma_sets: gamma,
        t_listed,
        t_star,
        stated_split: Some(split),
        criterion: Criterion::Basic,
    })
}

/// Identifies the positive roots of E7 orthogonal to the highest root with
/// D6, in Bourbaki numbering: δ₄ is the branch node, δ₃ δ₂ δ₁ the long arm
/// and δ₆ the fork tip equal to α_s. Returns, for each D6 simple index, the
/// E7 root it maps to.
fn d6_embedding(sys: &RootSystem, beta: RootId, s: usize) -> Result<Vec<RootId>> {
    let perp: BTreeSet<RootId> =
        sys.positive_roots().into_iter().filter(|&a| sys.form(a, beta) == crate::Q::from_integer(0)).collect();
    let comps = irreducible_components(sys, &perp);
    let bad = || Error::Malformed("the orthogonal of the highest root of E7 is not of type D6".into());
    if comps.len() != 1 || perp.len() != 30 {
        return Err(bad());
    }
    let simple: Vec<RootId> = perp
        .iter()
        .copied()
        .filter(|&r| !perp.iter().any(|&a| sys.sub(r, a).is_some_and(|b| perp.contains(&b))))
        .collect();
    let adj = |a: RootId, b: RootId| a != b && sys.form(a, b) != crate::Q::from_integer(0);
    let degree = |a: RootId| simple.iter().filter(|&&b| adj(a, b)).count();
    let branch = *simple.iter().find(|&&a| degree(a) == 3).ok_or_else(bad)?;
    let tip = sys.simple(s - 1);
    if !simple.contains(&tip) || !adj(tip, branch) || degree(tip) != 1 {
        return Err(bad());
    }
    let other_tip = *simple.iter().find(|&&a| a != tip && adj(a, branch) && degree(a) == 1).ok_or_else(bad)?;
    let mut arm = Vec::new();
    let mut prev = branch;
    let mut cur = *simple.iter().find(|&&a| adj(a, branch) && degree(a) == 2).ok_or_else(bad)?;
    loop {
        arm.push(cur);
        let Some(&next) = simple.iter().find(|&&a| a != prev && adj(a, cur)) else { break };
        prev = cur;
        cur = next;
    }
    if arm.len() != 3 {
        return Err(bad());
    }
    Ok(vec![arm[2], arm[1], arm[0], branch, other_tip, tip])
}

pub(super) fn e7(sys: Arc<RootSystem>, case: CaseId) -> Result<Candidate> {
    let par = Arc::new(ParabolicData::new(Arc::clone(&sys), case.s)?);
    let (full, _) = cascades(&par);
    let s = &*sys;
    let beta = full.items.first().map(|i| i.root).ok_or_else(|| Error::Malformed("empty cascade".into()))?;
    let images = d6_embedding(s, beta, case.s)?;

    let d6 = classical::d6_extremal()?;
    let dsys = d6.system();
    let phi = |r: RootId| -> Result<RootId> {
        let mut c = vec![0i32; s.rank];
        for (k, &a) in dsys.coeffs(r).iter().enumerate() {
            for (slot, &b) in c.iter_mut().zip(s.coeffs(images[k])) {
                *slot += a * b;
            }
        }
        s.root_from_coeffs(&c)
    };
    let phi_set = |set: &BTreeSet<RootId>| set.iter().map(|&r| phi(r)).collect::<Result<BTreeSet<_>>>();

    let mut gamma = BTreeMap::new();
    gamma.insert(beta, cascade_set(&full, beta, s)?);
    for (&g, set) in &d6.gamma_sets {
        gamma.insert(phi(g)?, phi_set(set)?);
    }
    let t_listed: BTreeSet<RootId> = super::closed_forms::E7_T.iter().map(|c| root(s, c)).collect::<Result<_>>()?;
    Ok(Candidate {
        case,
        parabolic: par,
        gamma_sets: gamma,
        t_listed,
        t_star: BTreeSet::new(),
        stated_split: None,
        criterion: Criterion::Extended,
    })
}
