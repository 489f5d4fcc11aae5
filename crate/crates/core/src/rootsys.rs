//! Root systems of types B_n, D_n, E6 and E7 in the Bourbaki ε-basis.
//!
//! Roots are generated by reflection closure from the simple roots and
//! stored in one table sorted lexicographically by simple-root
//! coefficients, so that a `RootId` order is also the serialization order.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::{linalg, Error, Result, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    B,
    D,
    E6,
    E7,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Family::B => "B",
            Family::D => "D",
            Family::E6 => "E6",
            Family::E7 => "E7",
        };
        f.write_str(name)
    }
}

impl FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_uppercase().as_str() {
            "B" => Ok(Family::B),
            "D" => Ok(Family::D),
            "E6" => Ok(Family::E6),
            "E7" => Ok(Family::E7),
            other => Err(format!("unknown family {other:?} (expected B, D, E6 or E7)")),
        }
    }
}

/// Index into `RootSystem::roots`.
pub type RootId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Root {
    pub coords: Vec<Q>,
    pub simple_coeffs: Vec<i32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Weight {
    pub coords: Vec<Q>,
}

impl Weight {
    pub fn zero(dim: usize) -> Self {
        Weight { coords: vec![Q::zero(); dim] }
    }

    pub fn add_scaled(&mut self, c: Q, v: &[Q]) {
        for (x, y) in self.coords.iter_mut().zip(v) {
            *x += c * y;
        }
    }

    pub fn scaled(&self, c: Q) -> Weight {
        Weight { coords: self.coords.iter().map(|x| x * c).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|x| x.is_zero())
    }

    /// The rational `c` with `self = c * other`, if any.
    pub fn ratio_to(&self, other: &Weight) -> Option<Q> {
        let k = other.coords.iter().position(|x| !x.is_zero())?;
        let c = self.coords[k] / other.coords[k];
        (*self == other.scaled(c)).then_some(c)
    }
}

/// The ε-dot-product, standing in for the Killing form.
pub fn inner(a: &[Q], b: &[Q]) -> Result<Q> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch(a.len(), b.len()));
    }
    Ok(a.iter().zip(b).map(|(x, y)| x * y).sum())
}

fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    pub family: Family,
    pub rank: usize,
    /// Ambient dimension of the ε-space.
    pub dim: usize,
    simple: Vec<Vec<Q>>,
    /// `cartan[i][j] = ⟨α_i, α_j∨⟩`.
    cartan: Vec<Vec<i32>>,
    roots: Vec<Root>,
    by_coeffs: HashMap<Vec<i32>, RootId>,
    by_coords: HashMap<Vec<Q>, RootId>,
    negation: Vec<RootId>,
    sums: Vec<Option<RootId>>,
    gram: Vec<Q>,
    simple_ids: Vec<RootId>,
}

fn half(n: i64) -> Q {
    Q::new(n, 2)
}

fn simple_roots(family: Family, rank: usize) -> Result<(usize, Vec<Vec<Q>>)> {
    let unsupported = Err(Error::UnsupportedSystem { family, rank });
    let unit = |dim: usize, terms: &[(usize, Q)]| {
        let mut v = vec![Q::zero(); dim];
        for &(i, c) in terms {
            v[i - 1] += c;
        }
        v
    };
    let one = Q::one();
    match family {
        Family::B | Family::D => {
            let min = if family == Family::B { 2 } else { 4 };
            if rank < min {
                return unsupported;
            }
            let n = rank;
            let mut simple: Vec<Vec<Q>> = (1..n).map(|i| unit(n, &[(i, one), (i + 1, -one)])).collect();
            simple.push(if family == Family::B { unit(n, &[(n, one)]) } else { unit(n, &[(n - 1, one), (n, one)]) });
            Ok((n, simple))
        }
        Family::E6 | Family::E7 => {
            let expected = if family == Family::E6 { 6 } else { 7 };
            if rank != expected {
                return unsupported;
            }
            let mut a1 = vec![half(-1); 8];
            a1[0] = half(1);
            a1[7] = half(1);
            let mut simple = vec![a1, unit(8, &[(1, one), (2, one)]), unit(8, &[(2, one), (1, -one)])];
            for i in 4..=rank {
                simple.push(unit(8, &[(i - 1, one), (i - 2, -one)]));
            }
            Ok((8, simple))
        }
    }
}

impl RootSystem {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let (dim, simple) = simple_roots(family, rank)?;
        let cartan: Vec<Vec<i32>> = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| {
                        let v = Q::from_integer(2) * dot(&simple[i], &simple[j]) / dot(&simple[j], &simple[j]);
                        assert!(v.is_integer());
                        *v.numer() as i32
                    })
                    .collect()
            })
            .collect();

        // Weyl orbit of the simple roots, computed on coefficient vectors.
        let mut seen: BTreeSet<Vec<i32>> = BTreeSet::new();
        let mut queue: VecDeque<Vec<i32>> = VecDeque::new();
        for i in 0..rank {
            let mut c = vec![0; rank];
            c[i] = 1;
            if seen.insert(c.clone()) {
                queue.push_back(c);
            }
        }
        while let Some(c) = queue.pop_front() {
            for i in 0..rank {
                let pairing: i32 = (0..rank).map(|j| c[j] * cartan[j][i]).sum();
                if pairing == 0 {
                    continue;
                }
                let mut r = c.clone();
                r[i] -= pairing;
                if seen.insert(r.clone()) {
                    queue.push_back(r);
                }
            }
        }

        let roots: Vec<Root> = seen
            .into_iter()
            .map(|c| {
                let mut coords = vec![Q::zero(); dim];
                for (k, &a) in c.iter().enumerate() {
                    for (x, s) in coords.iter_mut().zip(&simple[k]) {
                        *x += Q::from_integer(a as i64) * s;
                    }
                }
                Root { coords, simple_coeffs: c }
            })
            .collect();
        let by_coeffs: HashMap<Vec<i32>, RootId> =
            roots.iter().enumerate().map(|(i, r)| (r.simple_coeffs.clone(), i)).collect();
        let by_coords: HashMap<Vec<Q>, RootId> = roots.iter().enumerate().map(|(i, r)| (r.coords.clone(), i)).collect();
        let count = roots.len();
        let negation =
            roots.iter().map(|r| by_coeffs[&r.simple_coeffs.iter().map(|a| -a).collect::<Vec<_>>()]).collect();
        let mut sums = vec![None; count * count];
        let mut gram = vec![Q::zero(); count * count];
        for a in 0..count {
            for b in 0..count {
                let s: Vec<i32> =
                    roots[a].simple_coeffs.iter().zip(&roots[b].simple_coeffs).map(|(x, y)| x + y).collect();
                sums[a * count + b] = by_coeffs.get(&s).copied();
                gram[a * count + b] = dot(&roots[a].coords, &roots[b].coords);
            }
        }
        let simple_ids = (0..rank)
            .map(|i| {
                let mut c = vec![0; rank];
                c[i] = 1;
                by_coeffs[&c]
            })
            .collect();
        Ok(RootSystem {
            family,
            rank,
            dim,
            simple,
            cartan,
            roots,
            by_coeffs,
            by_coords,
            negation,
            sums,
            gram,
            simple_ids,
        })
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn root(&self, id: RootId) -> &Root {
        &self.roots[id]
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn coeffs(&self, id: RootId) -> &[i32] {
        &self.roots[id].simple_coeffs
    }

    pub fn is_positive(&self, id: RootId) -> bool {
        self.roots[id].simple_coeffs.iter().all(|&a| a >= 0)
    }

    pub fn positive_roots(&self) -> Vec<RootId> {
        (0..self.len()).filter(|&i| self.is_positive(i)).collect()
    }

    pub fn simple(&self, i: usize) -> RootId {
        self.simple_ids[i]
    }

    pub fn simple_coords(&self, i: usize) -> &[Q] {
        &self.simple[i]
    }

    pub fn cartan(&self, i: usize, j: usize) -> i32 {
        self.cartan[i][j]
    }

    pub fn neg(&self, id: RootId) -> RootId {
        self.negation[id]
    }

    /// `a + b` when it is a root.
    pub fn add(&self, a: RootId, b: RootId) -> Option<RootId> {
        self.sums[a * self.len() + b]
    }

    /// `a - b` when it is a root.
    pub fn sub(&self, a: RootId, b: RootId) -> Option<RootId> {
        self.add(a, self.neg(b))
    }

    pub fn form(&self, a: RootId, b: RootId) -> Q {
        self.gram[a * self.len() + b]
    }

    pub fn norm2(&self, a: RootId) -> Q {
        self.form(a, a)
    }

    /// `⟨a, b∨⟩ = 2(a, b)/(b, b)`.
    pub fn pairing(&self, a: RootId, b: RootId) -> i32 {
        let v = Q::from_integer(2) * self.form(a, b) / self.norm2(b);
        *v.numer() as i32
    }

    /// The coroot `2a/(a, a)` as an ε-vector.
    pub fn coroot(&self, a: RootId) -> Vec<Q> {
        let c = Q::from_integer(2) / self.norm2(a);
        self.roots[a].coords.iter().map(|x| x * c).collect()
    }

    pub fn simple_coroot(&self, i: usize) -> Vec<Q> {
        self.coroot(self.simple_ids[i])
    }

    /// ρ(α): the sum of simple-root coefficients.
    pub fn height(&self, a: RootId) -> i32 {
        self.roots[a].simple_coeffs.iter().sum()
    }

    pub fn lookup_coeffs(&self, coeffs: &[i32]) -> Option<RootId> {
        self.by_coeffs.get(coeffs).copied()
    }

    pub fn lookup_coords(&self, coords: &[Q]) -> Option<RootId> {
        self.by_coords.get(coords).copied()
    }

    pub fn root_from_coeffs(&self, coeffs: &[i32]) -> Result<RootId> {
        self.lookup_coeffs(coeffs).ok_or_else(|| Error::NotARoot(format!("{coeffs:?}")))
    }

    /// Root given as `Σ c_k ε_{i_k}` with 1-based indices.
    pub fn eps(&self, terms: &[(usize, i64)]) -> Result<RootId> {
        let mut v = vec![Q::zero(); self.dim];
        for &(i, c) in terms {
            if i == 0 || i > self.dim {
                return Err(Error::NotARoot(format!("ε index {i} out of range")));
            }
            v[i - 1] += Q::from_integer(c);
        }
        self.lookup_coords(&v).ok_or_else(|| Error::NotARoot(format_eps(&v)))
    }

    /// Coefficients of a vector of the root span on the simple roots.
    pub fn simple_expansion(&self, coords: &[Q]) -> Result<Vec<Q>> {
        let n = self.rank;
        let gram: Vec<Vec<Q>> =
            (0..n).map(|i| (0..n).map(|j| dot(&self.simple[i], &self.simple[j])).collect()).collect();
        let rhs: Vec<Q> = (0..n).map(|j| dot(coords, &self.simple[j])).collect();
        let c = linalg::solve(&gram, &rhs).ok_or_else(|| Error::Singular("simple-root Gram matrix".into()))?;
        let mut back = Weight::zero(self.dim);
        for (k, ck) in c.iter().enumerate() {
            back.add_scaled(*ck, &self.simple[k]);
        }
        if back.coords != coords {
            return Err(Error::NotARoot(format!("{} is outside the root span", format_eps(coords))));
        }
        Ok(c)
    }

    /// `⟨w, α_i∨⟩`.
    pub fn weight_pairing(&self, w: &Weight, i: usize) -> Q {
        dot(&w.coords, &self.simple_coroot(i))
    }

    fn dual_basis(&self, indices: &[usize]) -> Result<Vec<Weight>> {
        let k = indices.len();
        let a: Vec<Vec<Q>> = indices
            .iter()
            .map(|&i| indices.iter().map(|&j| Q::from_integer(self.cartan[i][j] as i64)).collect())
            .collect();
        let inv = linalg::inverse(&a).ok_or_else(|| Error::Singular("Cartan matrix".into()))?;
        Ok((0..k)
            .map(|r| {
                let mut w = Weight::zero(self.dim);
                for (c, &j) in indices.iter().enumerate() {
                    w.add_scaled(inv[r][c], &self.simple[j]);
                }
                w
            })
            .collect())
    }

    /// ϖ_1, …, ϖ_n (0-based positions).
    pub fn fundamental_weights(&self) -> Vec<Weight> {
        let all: Vec<usize> = (0..self.rank).collect();
        self.dual_basis(&all).expect("Cartan matrix of a simple system is invertible")
    }

    /// ϖ′_α for α in `pi_prime` (0-based), computed inside span(π′).
    pub fn levi_weights(&self, pi_prime: &[usize]) -> Result<Vec<(usize, Weight)>> {
        if let Some(&bad) = pi_prime.iter().find(|&&i| i >= self.rank) {
            return Err(Error::BadSimpleIndex(bad + 1));
        }
        let mut idx = pi_prime.to_vec();
        idx.sort_unstable();
        idx.dedup();
        let ws = self.dual_basis(&idx)?;
        Ok(idx.into_iter().zip(ws).collect())
    }

    /// Human-readable root: ε-notation for B and D, coefficient tuple for E.
    pub fn format_root(&self, id: RootId) -> String {
        match self.family {
            Family::B | Family::D => format_eps(&self.roots[id].coords),
            Family::E6 | Family::E7 => format_coeffs(&self.roots[id].simple_coeffs),
        }
    }
}

pub fn format_coeffs(c: &[i32]) -> String {
    let parts: Vec<String> = c.iter().map(|a| a.to_string()).collect();
    format!("({})", parts.join(","))
}

fn subscript(n: usize) -> String {
    const DIGITS: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];
    n.to_string().chars().map(|c| DIGITS[c.to_digit(10).unwrap() as usize]).collect()
}

/// ε-notation for an exact vector, e.g. `ε₁−ε₂` or `½(ε₁+ε₈−ε₂)`.
pub fn format_eps(v: &[Q]) -> String {
    let halves = v.iter().any(|x| !x.is_integer());
    let scale = if halves { Q::from_integer(2) } else { Q::one() };
    let mut out = String::new();
    for (i, x) in v.iter().enumerate() {
        let y = x * scale;
        if y.is_zero() {
            continue;
        }
        let mag = y.abs();
        let sign = if y.is_negative() {
            "−"
        } else if out.is_empty() {
            ""
        } else {
            "+"
        };
        out.push_str(sign);
        if mag != Q::one() {
            out.push_str(&mag.to_string());
        }
        out.push('ε');
        out.push_str(&subscript(i + 1));
    }
    if out.is_empty() {
        out.push('0');
    }
    if halves {
        format!("½({out})")
    } else {
        out
    }
}
