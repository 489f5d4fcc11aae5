//! One line per acceptance criterion. Run with
//! `cargo test -p adapted-pairs-cli --test acceptance`.

use std::collections::BTreeMap;
use std::path::Path;
use std::process::{Command, ExitCode};
use std::sync::Arc;
use std::time::{Duration, Instant};

use adapted_pairs::audit::{all_triples, jacobi_defects, jacobiator, rigidity, string_law_defects};
use adapted_pairs::certificate::{format_coroot_combination, verify_candidate, verify_case, Certificate};
use adapted_pairs::chevalley::StructureTable;
use adapted_pairs::construction::{build_case, closed_forms, orbit_structure};
use adapted_pairs::scope::cases_up_to;
use adapted_pairs::verify::check_nondegeneracy;
use adapted_pairs::{CaseId, Family, RootSystem, Q};
use rand::{rngs::StdRng, Rng, SeedableRng};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn cert(f: Family, n: usize, s: usize) -> Result<Certificate, String> {
    let c = verify_case(CaseId::new(f, n, s)).map_err(|e| format!("{f}{n} s={s}: {e}"))?;
    ensure(c.verdict.pass, || format!("{f}{n} s={s} fails at {:?}", c.verdict.first_failure))?;
    Ok(c)
}

fn sorted(mut v: Vec<Q>) -> Vec<Q> {
    v.sort();
    v
}

fn ints(v: &[i64]) -> Vec<Q> {
    sorted(v.iter().map(|&x| Q::from_integer(x)).collect())
}

fn rep(pairs: &[(i64, usize)]) -> Vec<Q> {
    sorted(pairs.iter().flat_map(|&(w, m)| std::iter::repeat_n(Q::from_integer(w), m)).collect())
}

fn multiples(c: &Certificate, lower: bool) -> Result<Vec<Q>, String> {
    let b = if lower { &c.lower_bound } else { &c.improved_bound };
    let v: Option<Vec<Q>> = b.iter().map(|e| e.multiple.as_ref().and_then(|m| m.to_q().ok())).collect();
    v.map(sorted).ok_or_else(|| "a bound weight is off the ϖ_s line".into())
}

fn eigen(c: &Certificate) -> Vec<Q> {
    sorted(c.eigenvalues.iter().map(|e| e.value.to_q().unwrap()).collect())
}

fn h_of(c: &Certificate) -> Option<Vec<Q>> {
    c.h.as_ref().map(|h| h.iter().map(|x| x.to_q().unwrap()).collect())
}

fn within(t: Duration, limit: u64) -> Result<(), String> {
    ensure(t <= Duration::from_secs(limit), || format!("took {t:.2?}, limit {limit}s"))
}

fn e7() -> Outcome {
    let start = Instant::now();
    let c = cert(Family::E7, 7, 3)?;
    within(start.elapsed(), 10)?;
    ensure(c.degree_values().unwrap() == ints(&[3, 6, 8, 10, 18]), || format!("degrees {:?}", c.degrees))?;
    let want = closed_forms::expected_h(c.case_id()).unwrap();
    ensure(h_of(&c) == Some(want.clone()), || "h differs".into())?;
    Ok(format!("degrees {{3,6,8,10,18}}, h = {}", format_coroot_combination(&want)))
}

fn e6() -> Outcome {
    let start = Instant::now();
    let c = cert(Family::E6, 6, 6)?;
    within(start.elapsed(), 5)?;
    ensure(c.degree_values().unwrap() == ints(&[6, 8, 18]), || format!("degrees {:?}", c.degrees))?;
    let h = h_of(&c).ok_or("no h")?;
    let shown = format_coroot_combination(&h);
    ensure(shown == "−2α₁∨ − α₂∨ + α₃∨ + 6α₄∨ − 5α₅∨", || format!("h = {shown}"))?;
    ensure(eigen(&c) == ints(&[5, 7, 17]), || "eigenvalues".into())?;
    let lo = multiples(&c, true)?;
    ensure(lo == ints(&[3, 3, 6]), || format!("lower bound {lo:?}"))?;
    ensure(multiples(&c, false)? == lo, || "improved bound differs".into())?;
    Ok(format!("h = {shown}, bound {{3ϖ₆, 3ϖ₆, 6ϖ₆}}"))
}

fn b_sweep() -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    for n in 2..=12 {
        for s in (2..=n).step_by(2) {
            let c = cert(Family::B, n, s)?;
            ensure(c.t_size == n - s / 2 + 1 && c.index == c.t_size, || format!("B{n} s={s}: |T| = {}", c.t_size))?;
            count += 1;
        }
    }
    within(start.elapsed(), 120)?;
    Ok(format!("{count} cases, |T| = n − s/2 + 1"))
}

fn d_sweep() -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    for n in 4..=12 {
        for s in (2..=n - 2).step_by(2) {
            let c = cert(Family::D, n, s)?;
            let want = rep(&[(1, 3), (2, n - 2 - s / 2)]);
            ensure(multiples(&c, true)? == want && multiples(&c, false)? == want, || format!("D{n} s={s}: bounds"))?;
            count += 1;
        }
    }
    within(start.elapsed(), 120)?;
    Ok(format!("{count} cases, bounds {{ϖ_s ×3, 2ϖ_s ×(n−2−s/2)}}"))
}

fn d_extremal() -> Outcome {
    let start = Instant::now();
    for n in [6, 8, 10, 12] {
        let c = cert(Family::D, n, n)?;
        ensure(multiples(&c, true)? == multiples(&c, false)?, || format!("D{n}: bounds differ"))?;
        if n == 6 {
            ensure(eigen(&c) == ints(&[11, 2, 4, 6]), || format!("D6 eigenvalues {:?}", eigen(&c)))?;
            ensure(c.degree_values().unwrap() == ints(&[12, 3, 5, 7]), || "D6 degrees".into())?;
        }
    }
    within(start.elapsed(), 30)?;
    Ok("n ∈ {6,8,10,12}; D6 eigenvalues {11,2,4,6}, degrees {12,3,5,7}".into())
}

fn table(f: Family, n: usize) -> StructureTable {
    StructureTable::new(Arc::new(RootSystem::new(f, n).unwrap()))
}

fn properties() -> Outcome {
    let mut small: Vec<(Family, usize)> = (2..=6).map(|n| (Family::B, n)).collect();
    small.extend((4..=6).map(|n| (Family::D, n)));
    small.push((Family::E6, 6));
    let mut triples = 0usize;
    for &(f, n) in &small {
        let t = table(f, n);
        let len = t.system().len();
        triples += len * len * len;
        ensure(jacobi_defects(&t, all_triples(len)).is_empty(), || format!("Jacobi fails on {f}{n}"))?;
        ensure(string_law_defects(&t).is_empty(), || format!("|N| ≠ p+1 on {f}{n}"))?;
    }
    let t7 = table(Family::E7, 7);
    ensure(string_law_defects(&t7).is_empty(), || "|N| ≠ p+1 on E7".into())?;
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let len = t7.system().len();
    for _ in 0..10_000 {
        let (a, b, c) = (rng.gen_range(0..len), rng.gen_range(0..len), rng.gen_range(0..len));
        ensure(jacobiator(&t7, a, b, c).is_zero(), || format!("Jacobi fails on E7 ({a},{b},{c})"))?;
    }

    let cases = cases_up_to(12);
    for &case in &cases {
        let c = build_case(case).map_err(|e| e.to_string())?;
        let os = orbit_structure(&c).map_err(|e| e.to_string())?;
        ensure(os.o.iter().all(|&a| os.theta(os.theta(a)) == a && os.theta(a) != a), || format!("{case}: θ² ≠ id"))?;
        ensure(os.o.len() % 2 == 0, || format!("{case}: |O| odd"))?;
        let t = StructureTable::new(c.parabolic.system_arc());
        let nd = check_nondegeneracy(&c, &os, &t).map_err(|e| e.to_string())?;
        ensure(nd.monomial_ok && nd.size % 2 == 0, || format!("{case}: det M(t) is not a nonzero monomial"))?;
    }

    for (n, s) in [(4, 2), (6, 4)] {
        let c = build_case(CaseId::new(Family::B, n, s)).unwrap();
        let r = rigidity(&c, 100_000).map_err(|e| e.to_string())?;
        ensure(!r.truncated && r.violations.is_empty(), || format!("B{n} s={s}: rigidity {:?}", r.violations))?;
    }
    Ok(format!(
        "Jacobi on {triples} triples + 10000 E7 samples, θ/O/M(t) on {} cases, rigidity B4 s=2, B6 s=4",
        cases.len()
    ))
}

fn sweep_to(dir: &Path) -> Result<BTreeMap<String, Vec<u8>>, String> {
    let status = Command::new(env!("CARGO_BIN_EXE_adapted-pairs"))
        .args(["sweep", "--max-rank", "8", "--out"])
        .arg(dir)
        .output()
        .map_err(|e| e.to_string())?
        .status;
    ensure(status.success(), || format!("sweep exited with {status}"))?;
    let mut files = BTreeMap::new();
    for entry in std::fs::read_dir(dir).map_err(|e| e.to_string())? {
        let p = entry.map_err(|e| e.to_string())?.path();
        files.insert(
            p.file_name().unwrap().to_string_lossy().into_owned(),
            std::fs::read(&p).map_err(|e| e.to_string())?,
        );
    }
    Ok(files)
}

fn negatives() -> Outcome {
    let base = build_case(CaseId::new(Family::B, 6, 4)).unwrap();
    let s = base.s_set();
    let old = *s.iter().next().unwrap();
    let new = base.system().positive_roots().into_iter().find(|r| !s.contains(r)).unwrap();
    let mut bad = base.clone();
    let mut set = bad.gamma_sets.remove(&old).unwrap();
    set.remove(&old);
    set.insert(new);
    bad.gamma_sets.insert(new, set);
    let c = verify_candidate(&bad);
    ensure(!c.verdict.pass, || "corrupted S passed".into())?;
    let corrupted = c.verdict.first_failure.clone().unwrap();

    let mut dropped = base.clone();
    let g = *dropped.gamma_sets.keys().next().unwrap();
    dropped.gamma_sets.remove(&g);
    let c = verify_candidate(&dropped);
    ensure(!c.check("partition").unwrap().passed, || "dropping a Γ set kept the partition".into())?;

    let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    let (fa, fb) = (sweep_to(a.path())?, sweep_to(b.path())?);
    ensure(fa.len() > 1 && fa == fb, || "sweep certificates differ between runs".into())?;
    Ok(format!("corrupted S fails at {corrupted}, dropped Γ breaks partition, {} identical files", fa.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("E7 s=3", e7),
        ("E6 s=6", e6),
        ("B sweep n ≤ 12", b_sweep),
        ("D non-extremal sweep n ≤ 12", d_sweep),
        ("D extremal", d_extremal),
        ("property suite", properties),
        ("negative tests", negatives),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = f();
        let t = start.elapsed();
        match out {
            Ok(msg) => println!("PASS {} {name}: {msg} ({t:.2?})", k + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL {} {name}: {msg} ({t:.2?})", k + 1)
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
