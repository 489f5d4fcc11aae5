//! Stationary and cyclic roots, in their basic and extended forms, and the
//! combinatorial conditions of the non-degeneracy criteria built on them.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::construction::{Criterion, OrbitStructure};
use crate::rootsys::{RootId, RootSystem};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Classification {
    Stationary,
    ExtendedStationary,
    Cyclic,
    ExtendedCyclic,
    TildeOfCyclic,
    Unclassified,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceTrace {
    pub start: RootId,
    /// α⁰, α¹, … up to the stationary rank (or until the walk broke off).
    pub forward: Vec<RootId>,
    /// α⁽⁰⁾ = θ(α), α⁽¹⁾, …
    pub backward: Vec<RootId>,
    pub stationary_rank_forward: Option<usize>,
    pub stationary_rank_backward: Option<usize>,
    pub classification: Classification,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub ok: bool,
    /// One trace for every α with `S_α ∩ O^m ≠ ∅`.
    pub traces: BTreeMap<RootId, SequenceTrace>,
    pub failures: Vec<String>,
}

impl ClassificationReport {
    pub fn counts(&self) -> BTreeMap<Classification, usize> {
        let mut out = BTreeMap::new();
        for t in self.traces.values() {
            *out.entry(t.classification).or_insert(0) += 1;
        }
        out
    }
}

/// A walk `α⁰, α¹, …`; `rank` is set when it becomes stationary with every
/// visited root admissible.
struct Walk {
    roots: Vec<RootId>,
    rank: Option<usize>,
    three: bool,
}

struct Classifier<'a> {
    sys: &'a RootSystem,
    os: &'a OrbitStructure,
    extended: bool,
}

impl Classifier<'_> {
    /// Roots `w ∈ S_α ∖ {θ(α)}` with `w ∈ O₂` and `θ(w) ∈ O₁` (condition (*)).
    fn witnesses(&self, a: RootId) -> Vec<RootId> {
        let os = self.os;
        os.s_alpha[&a]
            .iter()
            .copied()
            .filter(|&w| w != os.theta(a) && os.stratum(w) == 2 && os.stratum(os.theta(w)) == 1)
            .collect()
    }

    /// Membership in `O₁ ⊔ O₂`, or `O₃` with a single (*) witness when the
    /// extended notions are in force.
    fn admissible(&self, a: RootId) -> bool {
        match self.os.stratum(a) {
            1 | 2 => true,
            3 => self.extended && self.witnesses(a).len() == 1,
            _ => false,
        }
    }

    fn walk(&self, start: RootId) -> Walk {
        let os = self.os;
        let mut roots = vec![start];
        let mut three = false;
        let mut cur = start;
        for step in 0..=os.o.len() {
            let b = os.theta(cur);
            if !self.admissible(cur) || !self.admissible(b) {
                return Walk { roots, rank: None, three };
            }
            three |= os.stratum(cur) == 3 || os.stratum(b) == 3;
            if os.stratum(b) == 1 {
                return Walk { roots, rank: Some(step), three };
            }
            let mut next: Vec<RootId> = os.s_alpha[&b].iter().copied().filter(|&x| x != cur).collect();
            if os.stratum(b) == 3 {
                let w = self.witnesses(b);
                next.retain(|x| !w.contains(x));
            }
            let [n] = next[..] else { return Walk { roots, rank: None, three } };
            if roots.contains(&n) {
                roots.push(n);
                return Walk { roots, rank: None, three };
            }
            roots.push(n);
            cur = n;
        }
        Walk { roots, rank: None, three }
    }

    /// The cyclic family `C_α` when `α` satisfies conditions (i)–(v) and
    /// (vi), or (vie) in the extended setting.
    fn cyclic(&self, a: RootId) -> Option<CyclicFamily> {
        let (os, sys) = (self.os, self.sys);
        let ta = os.theta(a);
        for &g in &os.s_alpha[&ta] {
            if g == a {
                continue;
            }
            let tg = os.theta(g);
            // (ii) θ(γ) + β = α + θ(α)
            let Some(beta) = sys.sub(os.centre_of[&a], tg).filter(|b| os.o.contains(b)) else { continue };
            let tb = os.theta(beta);
            // (i) θ(α) + γ = β + θ(β) and (iii) θ(β) + α = γ + θ(γ)
            if sys.add(ta, g) != Some(os.centre_of[&beta]) || sys.add(tb, a) != Some(os.centre_of[&g]) {
                continue;
            }
            let members: BTreeSet<RootId> = [a, beta, g, ta, tb, tg].into_iter().collect();
            if members.len() != 6 || members.iter().any(|&d| !matches!(os.stratum(d), 2 | 3)) {
                continue;
            }
            let mut tildes = Vec::new();
            let mut basic = true;
            let mut good = true;
            for &d in members.iter().filter(|&&d| os.stratum(d) == 3) {
                let rest: Vec<RootId> = os.s_alpha[&d].iter().copied().filter(|x| !members.contains(x)).collect();
                let [t] = rest[..] else {
                    good = false;
                    break;
                };
                let simple = os.stratum(t) == 2 && os.stratum(os.theta(t)) == 1;
                basic &= simple;
                if simple {
                    tildes.push(t);
                } else if self.extended {
                    let w = self.walk(t);
                    if w.rank.is_none() {
                        good = false;
                        break;
                    }
                    tildes.extend(w.roots);
                } else {
                    good = false;
                    break;
                }
            }
            if good {
                return Some(CyclicFamily { tildes, basic });
            }
        }
        None
    }
}

struct CyclicFamily {
    /// `δ̃` for every `δ ∈ C_α ∩ O₃`, followed in the extended setting by the
    /// walks `δ̃¹, δ̃², …`.
    tildes: Vec<RootId>,
    /// Whether the family is cyclic without the extended rules.
    basic: bool,
}

pub fn classify_roots(sys: &RootSystem, os: &OrbitStructure, criterion: Criterion) -> ClassificationReport {
    let cl = Classifier { sys, os, extended: criterion == Criterion::Extended };
    let mut failures = Vec::new();

    for (part, name) in [(&os.o_plus, "O⁺"), (&os.o_minus, "O⁻")] {
        for &a in part {
            let inside: BTreeSet<RootId> = os.s_alpha[&a].intersection(part).copied().collect();
            if inside != BTreeSet::from([os.theta(a)]) {
                failures.push(format!("S_α ∩ {name} ≠ {{θ(α)}} for α = {}", sys.format_root(a)));
            }
        }
    }

    let mut cyclic: BTreeMap<RootId, CyclicFamily> = BTreeMap::new();
    for &a in &os.o {
        if let Some(c) = cl.cyclic(a) {
            cyclic.insert(a, c);
        }
    }
    let tilde: BTreeSet<RootId> = cyclic.values().flat_map(|c| c.tildes.iter().copied()).collect();

    let mut traces = BTreeMap::new();
    for &a in &os.o {
        if os.s_alpha[&a].is_disjoint(&os.o_mixed) {
            continue;
        }
        let fw = cl.walk(a);
        let bw = cl.walk(os.theta(a));
        let classification = if fw.rank.is_some() && bw.rank.is_some() {
            if fw.three || bw.three {
                Classification::ExtendedStationary
            } else {
                Classification::Stationary
            }
        } else if let Some(c) = cyclic.get(&a) {
            if c.basic {
                Classification::Cyclic
            } else {
                Classification::ExtendedCyclic
            }
        } else if tilde.contains(&a) || tilde.contains(&os.theta(a)) {
            Classification::TildeOfCyclic
        } else {
            failures.push(format!("{} is neither stationary, cyclic nor a tilde root", sys.format_root(a)));
            Classification::Unclassified
        };
        traces.insert(
            a,
            SequenceTrace {
                start: a,
                forward: fw.roots,
                backward: bw.roots,
                stationary_rank_forward: fw.rank,
                stationary_rank_backward: bw.rank,
                classification,
            },
        );
    }
    ClassificationReport { ok: failures.is_empty(), traces, failures }
}

/// `A_α ∪ A_θ(α)` for every stationary `α ∈ O` (extended notions included
/// when the criterion asks for them).
pub fn stationary_sets(
    sys: &RootSystem,
    os: &OrbitStructure,
    criterion: Criterion,
) -> BTreeMap<RootId, BTreeSet<RootId>> {
    let cl = Classifier { sys, os, extended: criterion == Criterion::Extended };
    let mut out = BTreeMap::new();
    for &a in &os.o {
        let (fw, bw) = (cl.walk(a), cl.walk(os.theta(a)));
        if fw.rank.is_some() && bw.rank.is_some() {
            let set = fw.roots.iter().chain(&bw.roots).flat_map(|&r| [r, os.theta(r)]).collect();
            out.insert(a, set);
        }
    }
    out
}
