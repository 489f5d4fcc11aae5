//! Truncated maximal parabolic data for π′ = π ∖ {α_s}.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use crate::rootsys::{Family, RootId, RootSystem};
use crate::{Error, Result};

/// −w₀ as a permutation of the simple roots (0-based).
pub fn involution_j(sys: &RootSystem) -> Vec<usize> {
    let n = sys.rank;
    let mut perm: Vec<usize> = (0..n).collect();
    match sys.family {
        Family::D if n % 2 == 1 => perm.swap(n - 2, n - 1),
        Family::E6 => {
            perm.swap(0, 5);
            perm.swap(2, 4);
        }
        _ => {}
    }
    perm
}

/// Connected components of the Dynkin subdiagram on `nodes`.
pub fn components(sys: &RootSystem, nodes: &[usize]) -> Vec<Vec<usize>> {
    let set: BTreeSet<usize> = nodes.iter().copied().collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for &start in &set {
        if !seen.insert(start) {
            continue;
        }
        let mut comp = vec![start];
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &w in &set {
                if sys.cartan(v, w) != 0 && w != v && seen.insert(w) {
                    comp.push(w);
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

fn neighbours(sys: &RootSystem, comp: &[usize], v: usize) -> Vec<usize> {
    comp.iter().copied().filter(|&w| w != v && sys.cartan(v, w) != 0).collect()
}

/// −w₀′ on the simple roots of `nodes`, acting component by component from
/// the recognised Dynkin type.
pub fn longest_element_action(sys: &RootSystem, nodes: &[usize]) -> BTreeMap<usize, usize> {
    let mut map = BTreeMap::new();
    for comp in components(sys, nodes) {
        for &v in &comp {
            map.insert(v, v);
        }
        let branch = comp.iter().copied().find(|&v| neighbours(sys, &comp, v).len() == 3);
        match branch {
            None => {
                let multiple = comp
                    .iter()
                    .any(|&v| neighbours(sys, &comp, v).iter().any(|&w| sys.cartan(v, w) * sys.cartan(w, v) > 1));
                if multiple {
                    continue;
                }
                // Type A: reverse the chain.
                let Some(&end) = comp.iter().find(|&&v| neighbours(sys, &comp, v).len() <= 1) else { continue };
                let mut path = vec![end];
                let mut prev = usize::MAX;
                let mut cur = end;
                while let Some(next) = neighbours(sys, &comp, cur).into_iter().find(|&w| w != prev) {
                    path.push(next);
                    prev = cur;
                    cur = next;
                }
                let k = path.len();
                for t in 0..k {
                    map.insert(path[t], path[k - 1 - t]);
                }
            }
            Some(b) => {
                let mut arms: Vec<Vec<usize>> = neighbours(sys, &comp, b)
                    .into_iter()
                    .map(|first| {
                        let mut arm = vec![first];
                        let mut prev = b;
                        let mut cur = first;
                        while let Some(next) = neighbours(sys, &comp, cur).into_iter().find(|&w| w != prev) {
                            arm.push(next);
                            prev = cur;
                            cur = next;
                        }
                        arm
                    })
                    .collect();
                arms.sort_by_key(|a| (a.len(), a[0]));
                let lens: Vec<usize> = arms.iter().map(Vec::len).collect();
                let rank = comp.len();
                let swap = |map: &mut BTreeMap<usize, usize>, x: &[usize], y: &[usize]| {
                    for (&p, &q) in x.iter().zip(y) {
                        map.insert(p, q);
                        map.insert(q, p);
                    }
                };
                if lens[0] == 1 && lens[1] == 1 && rank % 2 == 1 {
                    swap(&mut map, &arms[0], &arms[1]);
                } else if lens == [1, 2, 2] {
                    swap(&mut map, &arms[1], &arms[2]);
                }
            }
        }
    }
    map
}

#[derive(Debug, Clone)]
pub struct ParabolicData {
    pub system: Arc<RootSystem>,
    /// Removed simple root, 1-based.
    pub s: usize,
    /// π′ as 0-based simple indices.
    pub pi_prime: Vec<usize>,
    pub levi_positive: BTreeSet<RootId>,
    pub levi_negative: BTreeSet<RootId>,
    pub j: Vec<usize>,
    pub i: Vec<usize>,
    /// ⟨ij⟩-orbits on π, 0-based, each sorted, listed by smallest element.
    pub orbits: Vec<Vec<usize>>,
    p_minus: Vec<bool>,
    p_dual: Vec<bool>,
}

impl ParabolicData {
    pub fn new(system: Arc<RootSystem>, s: usize) -> Result<Self> {
        let sys = &*system;
        if s == 0 || s > sys.rank {
            return Err(Error::BadSimpleIndex(s));
        }
        let pi_prime: Vec<usize> = (0..sys.rank).filter(|&k| k != s - 1).collect();
        let is_levi = |r: RootId| sys.coeffs(r)[s - 1] == 0;
        let levi_positive = (0..sys.len()).filter(|&r| is_levi(r) && sys.is_positive(r)).collect();
        let levi_negative = (0..sys.len()).filter(|&r| is_levi(r) && !sys.is_positive(r)).collect();
        let j = involution_j(sys);
        let w0 = longest_element_action(sys, &pi_prime);
        let mut i: Vec<usize> = (0..sys.rank).collect();
        for (&a, &b) in &w0 {
            i[a] = b;
        }
        // Extension to α_s: the first j(ij)^r(α_s) outside π′.
        let mut x = s - 1;
        for _ in 0..=sys.rank {
            let y = j[x];
            if y == s - 1 || !w0.contains_key(&y) {
                i[s - 1] = y;
                break;
            }
            x = w0[&y];
        }
        let ij: Vec<usize> = (0..sys.rank).map(|k| i[j[k]]).collect();
        let mut orbits = Vec::new();
        let mut seen = vec![false; sys.rank];
        for start in 0..sys.rank {
            if seen[start] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                orbit.push(k);
                k = ij[k];
            }
            orbit.sort_unstable();
            orbits.push(orbit);
        }
        let p_minus = (0..sys.len()).map(|r| !sys.is_positive(r) || is_levi(r)).collect();
        let p_dual = (0..sys.len()).map(|r| sys.is_positive(r) || is_levi(r)).collect();
        Ok(ParabolicData { system, s, pi_prime, levi_positive, levi_negative, j, i, orbits, p_minus, p_dual })
    }

    pub fn system(&self) -> &RootSystem {
        &self.system
    }

    pub fn system_arc(&self) -> Arc<RootSystem> {
        Arc::clone(&self.system)
    }

    pub fn index(&self) -> usize {
        self.orbits.len()
    }

    /// Coroot basis {α_j∨ : j ≠ s} of h_Λ, 0-based.
    pub fn h_lambda(&self) -> &[usize] {
        &self.pi_prime
    }

    /// Root vectors of p⁻: Δ⁻ ⊔ Δ⁺_{π′}.
    pub fn in_p_minus(&self, r: RootId) -> bool {
        self.p_minus[r]
    }

    /// Root vectors of the realisation of p*: Δ⁺ ⊔ Δ⁻_{π′}.
    pub fn in_p_dual(&self, r: RootId) -> bool {
        self.p_dual[r]
    }

    pub fn dual_roots(&self) -> Vec<RootId> {
        (0..self.system.len()).filter(|&r| self.p_dual[r]).collect()
    }

    pub fn minus_roots(&self) -> Vec<RootId> {
        (0..self.system.len()).filter(|&r| self.p_minus[r]).collect()
    }

    pub fn dim(&self) -> usize {
        self.dual_roots().len() + self.pi_prime.len()
    }
}
