//! Kostant cascade of strongly orthogonal roots and the maximal Heisenberg
//! sets `H_β = {α ∈ Δ_K⁺ : (α, β) > 0}`.

use std::collections::BTreeSet;

use num_traits::Zero;

use crate::rootsys::{RootId, RootSystem};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CascadeItem {
    /// Position in the cascade tree (child indices from the root).
    pub label: Vec<usize>,
    pub root: RootId,
    /// Positive roots of the irreducible subsystem Δ_K.
    pub subsystem: BTreeSet<RootId>,
    pub heisenberg: BTreeSet<RootId>,
}

#[derive(Debug, Clone, Default)]
pub struct Cascade {
    pub items: Vec<CascadeItem>,
}

impl Cascade {
    pub fn roots(&self) -> Vec<RootId> {
        self.items.iter().map(|i| i.root).collect()
    }

    pub fn item(&self, root: RootId) -> Option<&CascadeItem> {
        self.items.iter().find(|i| i.root == root)
    }

    pub fn heisenberg(&self, root: RootId) -> Option<&BTreeSet<RootId>> {
        self.item(root).map(|i| &i.heisenberg)
    }
}

/// Splits a set of positive roots of a closed subsystem into irreducible
/// components: simple roots are the indecomposable elements, and components
/// follow the connectivity of their Dynkin graph.
pub fn irreducible_components(sys: &RootSystem, roots: &BTreeSet<RootId>) -> Vec<BTreeSet<RootId>> {
    let simple: Vec<RootId> = roots
        .iter()
        .copied()
        .filter(|&r| !roots.iter().any(|&a| sys.sub(r, a).is_some_and(|b| roots.contains(&b))))
        .collect();
    let mut comp_of = vec![usize::MAX; simple.len()];
    let mut count = 0;
    for start in 0..simple.len() {
        if comp_of[start] != usize::MAX {
            continue;
        }
        comp_of[start] = count;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for w in 0..simple.len() {
                if comp_of[w] == usize::MAX && !sys.form(simple[v], simple[w]).is_zero() {
                    comp_of[w] = count;
                    stack.push(w);
                }
            }
        }
        count += 1;
    }
    let mut comps = vec![BTreeSet::new(); count];
    for &r in roots {
        // A root lies in the component of any simple root it is not orthogonal to.
        let k = (0..simple.len())
            .find(|&k| !sys.form(r, simple[k]).is_zero())
            .expect("a root is never orthogonal to every simple root of its subsystem");
        comps[comp_of[k]].insert(r);
    }
    comps.sort_by_key(|c| c.iter().next().copied());
    comps
}

/// Highest root of an irreducible positive system (maximal height).
pub fn highest_root(sys: &RootSystem, roots: &BTreeSet<RootId>) -> RootId {
    *roots.iter().max_by_key(|&&r| (sys.height(r), r)).expect("non-empty component")
}

pub fn heisenberg_max(sys: &RootSystem, component: &BTreeSet<RootId>, beta: RootId) -> BTreeSet<RootId> {
    component.iter().copied().filter(|&a| sys.form(a, beta) > Zero::zero()).collect()
}

pub fn kostant_cascade(sys: &RootSystem, positive: &BTreeSet<RootId>) -> Cascade {
    let mut cascade = Cascade::default();
    let mut stack: Vec<(Vec<usize>, BTreeSet<RootId>)> = vec![(Vec::new(), positive.clone())];
    while let Some((label, roots)) = stack.pop() {
        for (k, comp) in irreducible_components(sys, &roots).into_iter().enumerate() {
            let mut lab = label.clone();
            lab.push(k + 1);
            let beta = highest_root(sys, &comp);
            let heisenberg = heisenberg_max(sys, &comp, beta);
            let rest: BTreeSet<RootId> = comp.iter().copied().filter(|&a| sys.form(a, beta).is_zero()).collect();
            if !rest.is_empty() {
                stack.push((lab.clone(), rest));
            }
            cascade.items.push(CascadeItem { label: lab, root: beta, subsystem: comp, heisenberg });
        }
    }
    cascade.items.sort_by(|a, b| a.label.cmp(&b.label));
    cascade
}
