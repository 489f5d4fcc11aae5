//! The full verification pipeline for one case and its serialisable
//! certificate.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Number;

use crate::bounds::{self, BoundMultiset};
use crate::chevalley::StructureTable;
use crate::construction::{build_case, closed_forms, orbit_structure, Candidate};
use crate::rootsys::{format_eps, RootId, RootSystem};
use crate::scope::{cases_up_to, CaseId};
use crate::verify;
use crate::{Error, Family, Result, Q};

pub const SCHEMA: u32 = 1;

/// An exact rational as `{"num": …, "den": …}`; integers of any size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rational {
    pub num: Number,
    pub den: Number,
}

impl Rational {
    pub fn from_q(q: Q) -> Self {
        Rational { num: Number::from(*q.numer()), den: Number::from(*q.denom()) }
    }

    pub fn from_big(q: &BigRational) -> Self {
        let num = Number::from_str(&q.numer().to_string()).expect("integer literal");
        let den = Number::from_str(&q.denom().to_string()).expect("integer literal");
        Rational { num, den }
    }

    pub fn from_int(n: &BigInt) -> Self {
        Rational::from_big(&BigRational::from_integer(n.clone()))
    }

    pub fn to_big(&self) -> Result<BigRational> {
        let parse = |n: &Number| {
            BigInt::from_str(&n.to_string()).map_err(|_| Error::Malformed(format!("{n} is not an integer")))
        };
        let den = parse(&self.den)?;
        if den == BigInt::from(0) {
            return Err(Error::Malformed("zero denominator".into()));
        }
        Ok(BigRational::new(parse(&self.num)?, den))
    }

    pub fn to_q(&self) -> Result<Q> {
        crate::linalg::from_big(&self.to_big()?).ok_or_else(|| Error::Malformed("rational out of range".into()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseRecord {
    pub family: Family,
    pub rank: usize,
    pub s: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaRecord {
    pub centre: Vec<i32>,
    pub members: Vec<Vec<i32>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EigenRecord {
    pub root: Vec<i32>,
    pub value: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundRecord {
    /// Multiple of ϖ_s, absent if the weight is off that line.
    pub multiple: Option<Rational>,
    /// The weight in ε-coordinates.
    pub weight: Vec<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub pass: bool,
    pub first_failure: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub schema: u32,
    pub case: CaseRecord,
    pub index: usize,
    pub s_plus: Vec<Vec<i32>>,
    pub s_minus: Vec<Vec<i32>>,
    pub s_mixed: Vec<Vec<i32>>,
    pub gamma_sets: Vec<GammaRecord>,
    pub t: Vec<Vec<i32>>,
    pub t_star: Vec<Vec<i32>>,
    /// Coefficients on `α_1∨, …, α_n∨`.
    pub h: Option<Vec<Rational>>,
    pub eigenvalues: Vec<EigenRecord>,
    pub degrees: Vec<Rational>,
    pub lower_bound: Vec<BoundRecord>,
    pub improved_bound: Vec<BoundRecord>,
    pub basis_det: Option<Rational>,
    pub heisenberg_ok: bool,
    pub classification_ok: bool,
    pub classification_counts: BTreeMap<String, usize>,
    pub o_size: Option<usize>,
    pub nondegeneracy_det: Option<Rational>,
    pub dim_p: Option<usize>,
    pub regularity_rank: Option<usize>,
    pub t_size: usize,
    pub bounds_coincide: bool,
    pub checks: Vec<CheckRecord>,
    pub verdict: Verdict,
}

impl Certificate {
    pub fn case_id(&self) -> CaseId {
        CaseId::new(self.case.family, self.case.rank, self.case.s)
    }

    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let c: Certificate = serde_json::from_str(text)?;
        if c.schema != SCHEMA {
            return Err(Error::Malformed(format!("unsupported schema {}", c.schema)));
        }
        Ok(c)
    }

    pub fn check(&self, name: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Sorted degrees as rationals.
    pub fn degree_values(&self) -> Result<Vec<Q>> {
        self.degrees.iter().map(Rational::to_q).collect()
    }
}

/// Names of the checks, in the order they run.
pub const CHECKS: [&str; 12] = [
    "partition",
    "s_size",
    "split",
    "basis",
    "heisenberg",
    "t_index",
    "classification",
    "nondegeneracy",
    "regularity",
    "eigenvalues",
    "lower_bound",
    "bounds",
];

struct Checks(Vec<CheckRecord>);

impl Checks {
    fn push(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        debug_assert!(CHECKS.contains(&name));
        self.0.push(CheckRecord { name: name.into(), passed, detail: detail.into() });
    }
}

fn bound_records(b: &BoundMultiset) -> Vec<BoundRecord> {
    b.entries
        .iter()
        .map(|e| BoundRecord {
            multiple: e.multiple.map(Rational::from_q),
            weight: e.weight.coords.iter().map(|&q| Rational::from_q(q)).collect(),
        })
        .collect()
}

fn show_multiples(v: &Option<Vec<Q>>) -> String {
    match v {
        Some(v) => v.iter().map(|q| format!("{q}ϖ")).collect::<Vec<_>>().join(", "),
        None => "off the ϖ_s line".into(),
    }
}

/// Runs every check on a candidate (possibly a deliberately corrupted one).
pub fn verify_candidate(c: &Candidate) -> Certificate {
    let sys = c.system();
    let par = &*c.parabolic;
    let coeffs = |r: RootId| sys.coeffs(r).to_vec();
    let list = |set: &std::collections::BTreeSet<RootId>| set.iter().map(|&r| coeffs(r)).collect::<Vec<_>>();
    let mut checks = Checks(Vec::new());

    let partition = verify::check_partition(c);
    checks.push(
        "partition",
        partition.ok,
        if partition.ok {
            "Δ⁺ ⊔ Δ⁻_π′ = Γ ⊔ T ⊔ T*".to_string()
        } else {
            format!(
                "{} listed roots are covered elsewhere, {} uncovered roots are not listed{}",
                partition.unexpected.len(),
                partition.missing.len(),
                if partition.t_star_overlap { ", T* overlaps" } else { "" }
            )
        },
    );

    let s_len = c.gamma_sets.len();
    let k = par.h_lambda().len();
    checks.push("s_size", s_len == k, format!("|S| = {s_len}, dim h_Λ = {k}"));

    let split = c.split();
    let relabelled = c.check_labels();
    let split_detail = {
        let mut d = format!("|S⁺| = {}, |S⁻| = {}, |S^m| = {}", split[0].len(), split[1].len(), split[2].len());
        match &relabelled {
            None => d.push_str(", stated labels disagree with the sets"),
            Some(extra) if !extra.is_empty() => {
                let names: Vec<String> = extra.iter().map(|&r| sys.format_root(r)).collect();
                let _ = write!(d, "; one-signed but treated as mixed: {}", names.join(", "));
            }
            Some(_) => {}
        }
        d
    };
    checks.push("split", relabelled.is_some(), split_detail);

    let basis = verify::check_basis_restriction(c);
    let basis_det = basis.as_ref().ok().map(|b| Rational::from_int(&b.det));
    match &basis {
        Ok(b) => checks.push("basis", b.ok, format!("det = {}", b.det)),
        Err(e) => checks.push("basis", false, e.to_string()),
    }

    let heis = verify::check_heisenberg(c);
    checks.push("heisenberg", heis.ok, heis.failures.first().cloned().unwrap_or_else(|| "all sets Heisenberg".into()));

    let t_size = c.t_listed.len();
    let index = par.index();
    checks.push("t_index", t_size == index, format!("|T| = {t_size}, index = {index}"));

    let table = StructureTable::new(c.parabolic.system_arc());
    let os = if heis.ok { orbit_structure(c).ok() } else { None };
    let mut classification_ok = false;
    let mut classification_counts = BTreeMap::new();
    let mut o_size = None;
    let mut nondegeneracy_det = None;
    match &os {
        Some(os) => {
            o_size = Some(os.o.len());
            let cl = verify::classify_roots(sys, os, c.criterion);
            classification_ok = cl.ok;
            for (k, v) in cl.counts() {
                let key = serde_json::to_value(k).ok().and_then(|v| v.as_str().map(str::to_owned)).unwrap_or_default();
                classification_counts.insert(key, v);
            }
            checks.push(
                "classification",
                cl.ok,
                cl.failures
                    .first()
                    .cloned()
                    .unwrap_or_else(|| format!("{} roots meet O^m, all classified", cl.traces.len())),
            );
            match verify::check_nondegeneracy(c, os, &table) {
                Ok(nd) => {
                    nondegeneracy_det = Some(Rational::from_int(&nd.det));
                    let graded = match &nd.polynomial {
                        Some((coef, d)) => format!("det M(t) = {coef}·t^{d}"),
                        None => {
                            format!("det M(t) = det M·t^{}", nd.scaled_degree.map_or("?".into(), |d| d.to_string()))
                        }
                    };
                    checks.push(
                        "nondegeneracy",
                        nd.ok,
                        format!(
                            "|O| = {}, det M = {}, {graded}, expected degree {}",
                            nd.size, nd.det, nd.expected_degree
                        ),
                    );
                }
                Err(e) => checks.push("nondegeneracy", false, e.to_string()),
            }
        }
        None => {
            checks.push("classification", false, "skipped: no valid orbit structure");
            checks.push("nondegeneracy", false, "skipped: no valid orbit structure");
        }
    }

    let mut dim_p = None;
    let mut regularity_rank = None;
    match verify::check_regularity(c, &table) {
        Ok(r) => {
            dim_p = Some(r.dim_p);
            regularity_rank = Some(r.rank);
            let star =
                if c.t_star.is_empty() { String::new() } else { format!(", T* ⊂ (ad p⁻)y + g_T: {}", r.t_star_ok) };
            checks.push(
                "regularity",
                r.ok,
                format!(
                    "dim p = {}, rank = {}, |T| = {}, rank with g_T = {}{star}",
                    r.dim_p, r.rank, r.t_size, r.augmented_rank
                ),
            );
        }
        Err(e) => checks.push("regularity", false, e.to_string()),
    }

    let mut h = None;
    let mut eigenvalues = Vec::new();
    let mut degrees = Vec::new();
    match verify::solve_h(c) {
        Ok(pair) => {
            h = Some(pair.h.iter().map(|&q| Rational::from_q(q)).collect());
            eigenvalues = pair
                .eigenvalues
                .iter()
                .map(|&(r, v)| EigenRecord { root: coeffs(r), value: Rational::from_q(v) })
                .collect();
            degrees = pair.degrees.iter().map(|&q| Rational::from_q(q)).collect();
            match verify::eigenvalue_report(&pair, c) {
                Ok(rep) => {
                    let shown: Vec<String> = rep.computed.iter().map(|q| q.to_string()).collect();
                    let mut detail = format!("eigenvalues {{{}}}, expected {:?}", shown.join(", "), rep.expected);
                    if let Some(m) = rep.h_matches {
                        let _ = write!(detail, ", h as printed: {m}");
                    }
                    checks.push("eigenvalues", rep.ok, detail);
                }
                Err(e) => checks.push("eigenvalues", false, e.to_string()),
            }
        }
        Err(e) => checks.push("eigenvalues", false, e.to_string()),
    }

    let lower = bounds::lower_bound(par);
    let improved = bounds::improved_bound(c);
    let expected: Option<Vec<Q>> =
        closed_forms::lower_bound(c.case).ok().map(|v| v.into_iter().map(Q::from_integer).collect());
    let mut lower_bound = Vec::new();
    let mut improved_bound = Vec::new();
    let mut bounds_coincide = false;
    match (&lower, &improved) {
        (Ok(lo), Ok(im)) => {
            lower_bound = bound_records(lo);
            improved_bound = bound_records(im);
            let lm = lo.multiples();
            checks.push("lower_bound", lm.is_some() && lm == expected, format!("−δ_Γ: {}", show_multiples(&lm)));
            bounds_coincide = bounds::certify_coincidence(lo, im);
            checks.push("bounds", bounds_coincide, format!("γ + t(γ): {}", show_multiples(&im.multiples())));
        }
        (Err(e), _) | (_, Err(e)) => {
            checks.push("lower_bound", false, e.to_string());
            checks.push("bounds", false, e.to_string());
        }
    }

    let first_failure = checks.0.iter().find(|c| !c.passed).map(|c| c.name.clone());
    let [sp, sm, smix] = &c.labels();
    Certificate {
        schema: SCHEMA,
        case: CaseRecord { family: c.case.family, rank: c.case.rank, s: c.case.s },
        index,
        s_plus: list(sp),
        s_minus: list(sm),
        s_mixed: list(smix),
        gamma_sets: c
            .gamma_sets
            .iter()
            .map(|(&g, set)| GammaRecord { centre: coeffs(g), members: list(set) })
            .collect(),
        t: list(&c.t_listed),
        t_star: list(&c.t_star),
        h,
        eigenvalues,
        degrees,
        lower_bound,
        improved_bound,
        basis_det,
        heisenberg_ok: heis.ok,
        classification_ok,
        classification_counts,
        o_size,
        nondegeneracy_det,
        dim_p,
        regularity_rank,
        t_size,
        bounds_coincide,
        checks: checks.0,
        verdict: Verdict { pass: first_failure.is_none(), first_failure },
    }
}

/// Builds and verifies one case; errors only for out-of-scope input.
pub fn verify_case(case: CaseId) -> Result<Certificate> {
    let c = build_case(case)?;
    Ok(verify_candidate(&c))
}

/// Every in-scope case up to `max_rank`, verified in parallel, in the fixed
/// order of [`cases_up_to`].
pub fn sweep(max_rank: usize) -> Vec<(CaseId, Result<Certificate>)> {
    cases_up_to(max_rank).into_par_iter().map(|c| (c, verify_case(c))).collect()
}

fn superscript_free_coeff(q: Q) -> String {
    if q.is_integer() {
        q.numer().abs().to_string()
    } else {
        format!("({}/{})", q.numer().abs(), q.denom())
    }
}

fn subscript(n: usize) -> String {
    const DIGITS: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];
    n.to_string().chars().map(|c| DIGITS[c.to_digit(10).unwrap() as usize]).collect()
}

/// `h` on the simple coroots, e.g. `−2α₁∨ − α₂∨ + α₃∨`.
pub fn format_coroot_combination(h: &[Q]) -> String {
    let mut out = String::new();
    for (k, &q) in h.iter().enumerate() {
        if q == Q::from_integer(0) {
            continue;
        }
        let neg = q < Q::from_integer(0);
        if out.is_empty() {
            if neg {
                out.push('−');
            }
        } else {
            out.push_str(if neg { " − " } else { " + " });
        }
        if q != Q::from_integer(1) && q != Q::from_integer(-1) {
            out.push_str(&superscript_free_coeff(q));
        }
        let _ = write!(out, "α{}∨", subscript(k + 1));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Markdown,
    Text,
}

impl FromStr for ReportFormat {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "md" | "markdown" => Ok(ReportFormat::Markdown),
            "txt" | "text" => Ok(ReportFormat::Text),
            other => Err(format!("unknown format {other:?} (expected md or txt)")),
        }
    }
}

fn render_root(sys: &RootSystem, c: &[i32]) -> Result<String> {
    let id = sys.root_from_coeffs(c).map_err(|_| Error::Malformed(format!("{c:?} is not a root")))?;
    Ok(sys.format_root(id))
}

fn render_set(sys: &RootSystem, set: &[Vec<i32>]) -> Result<String> {
    let parts = set.iter().map(|c| render_root(sys, c)).collect::<Result<Vec<_>>>()?;
    Ok(format!("{{{}}}", parts.join(", ")))
}

fn render_bound(b: &[BoundRecord], s: usize) -> Result<String> {
    let parts = b
        .iter()
        .map(|e| match &e.multiple {
            Some(m) => {
                let q = m.to_q()?;
                Ok(if q == Q::from_integer(1) {
                    format!("ϖ{}", subscript(s))
                } else {
                    format!("{q}ϖ{}", subscript(s))
                })
            }
            None => {
                let coords = e.weight.iter().map(Rational::to_q).collect::<Result<Vec<_>>>()?;
                Ok(format_eps(&coords))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(format!("{{{}}}", parts.join(", ")))
}

/// Human-readable rendering of a certificate, with roots in ε-notation for
/// the classical types and coefficient tuples for E6/E7.
pub fn render_report(cert: &Certificate, format: ReportFormat) -> Result<String> {
    let case = cert.case_id();
    let sys = Arc::new(RootSystem::new(case.family, case.rank).map_err(|e| Error::Malformed(e.to_string()))?);
    let md = format == ReportFormat::Markdown;
    let mut out = String::new();
    let verdict = if cert.verdict.pass {
        "PASS".to_string()
    } else {
        format!("FAIL (first failing check: {})", cert.verdict.first_failure.as_deref().unwrap_or("?"))
    };
    if md {
        let _ = writeln!(out, "# {case}\n\n**Verdict:** {verdict}\n");
    } else {
        let _ = writeln!(out, "{case}\nverdict: {verdict}\n");
    }
    let heading = |out: &mut String, t: &str| {
        if md {
            let _ = writeln!(out, "\n## {t}\n");
        } else {
            let _ = writeln!(out, "\n{t}\n{}", "-".repeat(t.chars().count()));
        }
    };
    let item = |out: &mut String, k: &str, v: &str| {
        if md {
            let _ = writeln!(out, "- {k}: {v}");
        } else {
            let _ = writeln!(out, "  {k}: {v}");
        }
    };

    heading(&mut out, "The set S");
    item(&mut out, "S⁺", &render_set(&sys, &cert.s_plus)?);
    item(&mut out, "S⁻", &render_set(&sys, &cert.s_minus)?);
    item(&mut out, "S^m", &render_set(&sys, &cert.s_mixed)?);

    heading(&mut out, "Heisenberg sets");
    if md {
        out.push_str("| centre | size | Γ |\n|---|---|---|\n");
    }
    for g in &cert.gamma_sets {
        let centre = render_root(&sys, &g.centre)?;
        let members = render_set(&sys, &g.members)?;
        if md {
            let _ = writeln!(out, "| {centre} | {} | {members} |", g.members.len());
        } else {
            let _ = writeln!(out, "  Γ of {centre} ({}): {members}", g.members.len());
        }
    }

    heading(&mut out, "Complement");
    item(&mut out, "T", &render_set(&sys, &cert.t)?);
    if !cert.t_star.is_empty() {
        item(&mut out, "T*", &render_set(&sys, &cert.t_star)?);
    }
    item(&mut out, "index", &cert.index.to_string());

    heading(&mut out, "Adapted pair");
    if let Some(h) = &cert.h {
        let h = h.iter().map(Rational::to_q).collect::<Result<Vec<_>>>()?;
        item(&mut out, "h", &format_coroot_combination(&h));
    }
    for e in &cert.eigenvalues {
        let v = e.value.to_q()?;
        item(&mut out, &format!("({})(h)", render_root(&sys, &e.root)?), &v.to_string());
    }
    let degrees = cert.degree_values()?.iter().map(|q| q.to_string()).collect::<Vec<_>>().join(", ");
    item(&mut out, "degrees", &format!("{{{degrees}}}"));

    heading(&mut out, "Bounds");
    item(&mut out, "ch A", &render_bound(&cert.lower_bound, case.s)?);
    item(&mut out, "B′", &render_bound(&cert.improved_bound, case.s)?);
    item(&mut out, "coincide", &cert.bounds_coincide.to_string());

    heading(&mut out, "Checks");
    if md {
        out.push_str("| check | result | detail |\n|---|---|---|\n");
    }
    for c in &cert.checks {
        let r = if c.passed { "pass" } else { "FAIL" };
        if md {
            let _ = writeln!(out, "| {} | {r} | {} |", c.name, c.detail.replace('|', "\\|"));
        } else {
            let _ = writeln!(out, "  {:<15} {r:<5} {}", c.name, c.detail);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coroot_rendering() {
        let h: Vec<Q> = [-2, -1, 1, 6, -5, 0].iter().map(|&x| Q::from_integer(x)).collect();
        assert_eq!(format_coroot_combination(&h), "−2α₁∨ − α₂∨ + α₃∨ + 6α₄∨ − 5α₅∨");
        assert_eq!(format_coroot_combination(&[Q::new(-13, 2)]), "−(13/2)α₁∨");
    }

    #[test]
    fn rational_round_trip() {
        let big = BigRational::new(BigInt::from(10).pow(40) + 1u32, BigInt::from(7));
        let r = Rational::from_big(&big);
        let text = serde_json::to_string(&r).unwrap();
        assert!(text.contains("10000000000000000000000000000000000000001"));
        let back: Rational = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_big().unwrap(), big);
    }
}
