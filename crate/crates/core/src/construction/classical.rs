//! Types B_n and D_n (non-extremal and extremal).

use std::collections::BTreeSet;
use std::sync::Arc;

use super::{cascades, span, Candidate, Criterion, Sets};
use crate::parabolic::ParabolicData;
use crate::rootsys::{RootId, RootSystem};
use crate::scope::CaseId;
use crate::{Error, Result};

fn heisenberg_of(c: &crate::cascade::Cascade, root: RootId, sys: &RootSystem) -> Result<BTreeSet<RootId>> {
    c.heisenberg(root)
        .cloned()
        .ok_or_else(|| Error::NotARoot(format!("{} is not a cascade root", sys.format_root(root))))
}

fn collect(ids: impl IntoIterator<Item = Result<RootId>>) -> Result<BTreeSet<RootId>> {
    ids.into_iter().collect()
}

fn finish(
    sys: &Arc<RootSystem>,
    par: Arc<ParabolicData>,
    case: CaseId,
    sets: Sets<'_>,
    t_listed: BTreeSet<RootId>,
    split: Option<[BTreeSet<RootId>; 3]>,
    criterion: Criterion,
) -> Candidate {
    debug_assert!(Arc::ptr_eq(sys, &par.system));
    Candidate {
        case,
        parabolic: par,
        gamma_sets: sets.gamma,
        t_listed,
        t_star: BTreeSet::new(),
        stated_split: split,
        criterion,
    }
}

pub(super) fn type_b(sys: Arc<RootSystem>, case: CaseId) -> Result<Candidate> {
    let par = Arc::new(ParabolicData::new(Arc::clone(&sys), case.s)?);
    let (full, _) = cascades(&par);
    let (n, s) = (case.rank as i64, case.s as i64);
    let h = s / 2;
    let mut g = Sets::new(&sys);

    let mut s_plus = BTreeSet::new();
    for i in span(1, h - 1) {
        let beta = g.p(2 * i - 1, 2 * i)?;
        s_plus.insert(beta);
        let drop = [g.e(2 * i - 1)?, g.e(2 * i)?];
        let set = heisenberg_of(&full, beta, &sys)?;
        g.insert(beta, set.into_iter().filter(|r| !drop.contains(r)).map(Ok))?;
    }
    if n > s {
        let c = g.p(s - 1, s + 1)?;
        s_plus.insert(c);
        let members: Vec<Result<RootId>> =
            span(s + 2, n).flat_map(|i| [g.p(s - 1, i), g.d(s - 1, i), g.d(s + 1, i), g.p(s + 1, i)]).collect();
        g.insert(c, members)?;
        for i in span(h + 1, (n - 1) / 2) {
            let c = g.p(2 * i, 2 * i + 1)?;
            s_plus.insert(c);
            let members: Vec<Result<RootId>> = span(2 * i + 2, n)
                .flat_map(|j| [g.p(2 * i, j), g.d(2 * i, j), g.d(2 * i + 1, j), g.p(2 * i + 1, j)])
                .collect();
            g.insert(c, members)?;
        }
    }

    let mut s_minus = BTreeSet::new();
    for i in span(1, h - 1) {
        let c = g.d(s - i, i)?;
        s_minus.insert(c);
        let members: Vec<Result<RootId>> = span(i + 1, s - i - 1).flat_map(|j| [g.d(j, i), g.d(s - i, j)]).collect();
        g.insert(c, members)?;
    }
    for i in span(h + 1, n / 2) {
        let c = g.m(2 * i - 1, 2 * i)?;
        s_minus.insert(c);
        let members: Vec<Result<RootId>> = span(2 * i + 1, n)
            .flat_map(|j| {
                [g.r(&[(2 * i - 1, -1), (j, 1)]), g.m(2 * i - 1, j), g.m(2 * i, j), g.r(&[(2 * i, -1), (j, 1)])]
            })
            .collect();
        g.insert(c, members)?;
    }

    let centre = g.e(s)?;
    let mut members: Vec<Result<RootId>> = span(1, n).filter(|&i| i != s).flat_map(|i| [g.e(i), g.d(s, i)]).collect();
    members.extend(span(s + 1, n).flat_map(|j| [g.p(s, j), g.ne(j)]));
    g.insert(centre, members)?;
    let s_mixed = BTreeSet::from([centre]);

    let mut t = vec![g.p(s - 1, s)];
    t.extend(span(1, h).map(|i| g.d(2 * i - 1, 2 * i)));
    if n > s {
        t.push(g.d(s - 1, s + 1));
        t.extend(span(1, (n - s) / 2).map(|j| g.d(s + 2 * j, s + 2 * j - 1)));
        t.extend(span(1, (n - s - 1) / 2).map(|k| g.d(s + 2 * k, s + 2 * k + 1)));
    }
    let t = collect(t)?;
    Ok(finish(&sys, par, case, g, t, Some([s_plus, s_minus, s_mixed]), Criterion::Basic))
}

pub(super) fn type_d(sys: Arc<RootSystem>, case: CaseId) -> Result<Candidate> {
    let par = Arc::new(ParabolicData::new(Arc::clone(&sys), case.s)?);
    let (full, _) = cascades(&par);
    let (n, s) = (case.rank as i64, case.s as i64);
    let h = s / 2;
    let mut g = Sets::new(&sys);

    let mut s_plus = BTreeSet::new();
    for i in span(1, h - 1) {
        let beta = g.p(2 * i - 1, 2 * i)?;
        s_plus.insert(beta);
        let drop = [g.d(2 * i - 1, n)?, g.p(2 * i, n)?];
        let set = heisenberg_of(&full, beta, &sys)?;
        g.insert(beta, set.into_iter().filter(|r| !drop.contains(r)).map(Ok))?;
    }
    let c = g.p(s - 1, s + 1)?;
    s_plus.insert(c);
    let mut members: Vec<Result<RootId>> = span(s + 2, n).flat_map(|i| [g.p(s - 1, i), g.d(s + 1, i)]).collect();
    members.extend(span(s + 2, n - 1).flat_map(|j| [g.d(s - 1, j), g.p(s + 1, j)]));
    g.insert(c, members)?;
    for i in span(h + 1, (n - 2) / 2) {
        let c = g.p(2 * i, 2 * i + 1)?;
        s_plus.insert(c);
        let mut members: Vec<Result<RootId>> =
            span(2 * i + 2, n).flat_map(|j| [g.d(2 * i, j), g.p(j, 2 * i + 1)]).collect();
        members.extend(span(2 * i + 2, n - 1).flat_map(|k| [g.p(2 * i, k), g.d(2 * i + 1, k)]));
        g.insert(c, members)?;
    }

    let mut s_minus = BTreeSet::new();
    for i in span(1, h - 1) {
        let c = g.d(s - i, i)?;
        s_minus.insert(c);
        let members: Vec<Result<RootId>> = span(i + 1, s - i - 1).flat_map(|j| [g.d(j, i), g.d(s - i, j)]).collect();
        g.insert(c, members)?;
    }
    for i in span(h + 1, (n - 1) / 2) {
        let c = g.m(2 * i - 1, 2 * i)?;
        s_minus.insert(c);
        let mut members: Vec<Result<RootId>> =
            span(2 * i + 1, n - 1).flat_map(|j| [g.m(2 * i - 1, j), g.d(j, 2 * i)]).collect();
        members.extend(span(2 * i + 1, n).flat_map(|k| [g.d(k, 2 * i - 1), g.m(k, 2 * i)]));
        g.insert(c, members)?;
    }

    let minus_centre = g.d(s, n)?;
    let mut members: Vec<Result<RootId>> =
        span(1, n / 2).filter(|&i| i != h + 1).flat_map(|i| [g.d(s, 2 * i - 1), g.d(2 * i - 1, n)]).collect();
    members.extend(span(h, (n - 2) / 2).flat_map(|j| [g.p(s, 2 * j + 1), g.m(2 * j + 1, n)]));
    g.insert(minus_centre, members)?;

    let plus_centre = g.p(s, n)?;
    let mut members: Vec<Result<RootId>> =
        span(1, (n - 1) / 2).filter(|&i| i != h).flat_map(|i| [g.d(s, 2 * i), g.p(2 * i, n)]).collect();
    members.extend([g.d(s, s + 1), g.p(s + 1, n)]);
    members.extend(span(h + 1, (n - 1) / 2).flat_map(|j| [g.p(s, 2 * j), g.d(n, 2 * j)]));
    g.insert(plus_centre, members)?;
    let s_mixed = BTreeSet::from([minus_centre, plus_centre]);

    let mut t = vec![g.p(s - 1, s), g.d(s - 1, s + 1)];
    t.extend(span(1, h).map(|i| g.d(2 * i - 1, 2 * i)));
    t.extend(span(h + 1, (n - 1) / 2).map(|j| g.d(2 * j, 2 * j + 1)));
    t.extend(span(h, (n - 2) / 2).map(|k| g.d(2 * k + 2, 2 * k + 1)));
    let t = collect(t)?;
    Ok(finish(&sys, par, case, g, t, Some([s_plus, s_minus, s_mixed]), Criterion::Basic))
}

/// D_n with s = n, n even ≥ 6.
pub(super) fn type_d_extremal(sys: Arc<RootSystem>, case: CaseId) -> Result<Candidate> {
    let par = Arc::new(ParabolicData::new(Arc::clone(&sys), case.s)?);
    let (full, _) = cascades(&par);
    let n = case.rank as i64;
    let mut g = Sets::new(&sys);

    for k in span(2, n / 2 - 3) {
        let c = g.d(2 * k, 2 * k - 2)?;
        let members: Vec<Result<RootId>> =
            span(1, 2 * k - 3).flat_map(|i| [g.d(2 * k, i), g.d(i, 2 * k - 2)]).collect();
        g.insert(c, members)?;
    }
    if n >= 8 {
        let c = g.d(n - 3, n - 6)?;
        let members: Vec<Result<RootId>> = span(1, n - 7).flat_map(|i| [g.d(n - 3, i), g.d(i, n - 6)]).collect();
        g.insert(c, members)?;
    }
    let c = g.d(n - 4, n - 5)?;
    let mut members = vec![g.d(n - 3, n - 5), g.d(n - 4, n - 3)];
    members.extend(span(1, n / 2 - 3).flat_map(|i| [g.d(n - 4, 2 * i), g.d(2 * i, n - 5)]));
    g.insert(c, members)?;

    let c = g.d(n - 2, n - 4)?;
    let mut members = vec![g.d(n - 2, n - 1), g.d(n - 1, n - 4), g.d(n - 2, n), g.d(n, n - 4)];
    members.extend(span(1, n - 5).flat_map(|i| [g.d(n - 2, i), g.d(i, n - 4)]));
    g.insert(c, members)?;

    let c = g.d(n, n - 3)?;
    let mut members = vec![g.d(n, n - 2), g.d(n - 2, n - 3), g.d(n, n - 1), g.d(n - 1, n - 3)];
    members.extend(span(1, n - 6).flat_map(|i| [g.d(n, i), g.d(i, n - 3)]));
    g.insert(c, members)?;

    let c = g.p(n - 3, n - 1)?;
    let mut members = vec![
        g.p(n - 3, n),
        g.d(n - 1, n),
        g.d(n - 3, n),
        g.p(n, n - 1),
        g.d(n - 3, n - 2),
        g.p(n - 2, n - 1),
        g.p(n - 3, n - 2),
        g.d(n - 1, n - 2),
    ];
    members.extend(span(1, n - 5).flat_map(|i| [g.d(n - 1, i), g.p(i, n - 3)]));
    g.insert(c, members)?;

    // β_{n/2−2}, then β_{n/2−k−1} for k = 2, …, n/2−2 by decreasing induction.
    let beta = g.p(n - 5, n - 4)?;
    let used = g.used();
    let mut members: Vec<Result<RootId>> =
        heisenberg_of(&full, beta, &sys)?.into_iter().filter(|r| *r != beta && !used.contains(r)).map(Ok).collect();
    members.extend(span(1, n - 6).flat_map(|i| [g.p(i, n - 4), g.d(n - 5, i)]));
    members.extend(span(1, n / 2 - 3).flat_map(|i| [g.d(n - 4, 2 * i - 1), g.p(2 * i - 1, n - 5)]));
    g.insert(beta, members)?;
    for k in span(2, n / 2 - 2) {
        let beta = g.p(n - 2 * k - 3, n - 2 * k - 2)?;
        let used = g.used();
        let mut members: Vec<Result<RootId>> =
            heisenberg_of(&full, beta, &sys)?.into_iter().filter(|r| *r != beta && !used.contains(r)).map(Ok).collect();
        members.extend(span(1, n - 2 * k - 4).flat_map(|i| [g.p(i, n - 2 * k - 2), g.d(n - 2 * k - 3, i)]));
        g.insert(beta, members)?;
    }

    let mut t = vec![g.d(n - 3, n - 1), g.p(n - 2, n), g.d(n, n - 5), g.d(n - 3, n - 4)];
    t.extend(span(3, n / 2 - 1).map(|k| g.d(n - 2 * k, n - 2 * k - 1)));
    let t = collect(t)?;
    Ok(finish(&sys, par, case, g, t, None, Criterion::Extended))
}

/// D6 extremal data, used to build the E7 case through the D6 subsystem.
pub(super) fn d6_extremal() -> Result<Candidate> {
    let sys = Arc::new(RootSystem::new(crate::Family::D, 6)?);
    type_d_extremal(sys, CaseId::new(crate::Family::D, 6, 6))
}
