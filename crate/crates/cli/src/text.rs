//! Human-readable rendering of a report.

use std::fmt::Write;

use crate::report::{BettiEntry, LabelSet, RunReport};

fn set(s: &LabelSet) -> String {
    if s.is_empty() {
        "1".to_string()
    } else if s.iter().all(|l| l.chars().count() == 1) {
        s.concat()
    } else {
        format!("{{{}}}", s.join(" "))
    }
}

fn sets(list: &[LabelSet]) -> String {
    list.iter().map(set).collect::<Vec<_>>().join(" ")
}

fn table(entries: &[BettiEntry]) -> String {
    entries
        .iter()
        .map(|e| format!("b({},{})={}", e.i, e.j, e.v))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn render(r: &RunReport) -> String {
    let mut out = String::new();
    let mut line = |s: String| {
        out.push_str(&s);
        out.push('\n');
    };
    if let Some(n) = r.n {
        line(format!("vertices: {n}"));
    }
    match (r.chordal, &r.witness) {
        (Some(true), _) => line("chordal: yes".into()),
        (Some(false), Some(w)) => line(format!(
            "chordal: no ({} has non-adjacent later neighbours {} and {})",
            w.vertex, w.non_adjacent[0], w.non_adjacent[1]
        )),
        (Some(false), None) => line("chordal: no".into()),
        (None, _) => {}
    }
    if let Some(c) = &r.covers {
        line(format!("minimal covers ({}): {}", c.len(), sets(c)));
    }
    if let Some(o) = &r.ordering {
        line(format!("ordering ({}, pivot {}): {}", o.method, o.pivot, sets(&o.gens)));
        if !o.colon_counts.is_empty() {
            let counts: Vec<String> = o.colon_counts.iter().map(|c| c.to_string()).collect();
            line(format!("colon counts: {}", counts.join(" ")));
        }
    }
    if let Some(s) = &r.shelling {
        let mut l = format!("shelling: {}", sets(&s.facets));
        if let Some(v) = s.verified {
            let _ = write!(l, " ({})", if v { "verified" } else { "NOT a shelling" });
        }
        line(l);
    }
    match (&r.betti_by_method, &r.betti) {
        (Some(by), _) => {
            for (name, entries) in by {
                line(format!("betti [{name}]: {}", table(entries)));
            }
        }
        (None, Some(b)) => line(format!("betti: {}", table(b))),
        _ => {}
    }
    if let Some(t) = &r.totals {
        let t: Vec<String> = t.iter().map(|v| v.to_string()).collect();
        line(format!("totals: {}", t.join(" ")));
    }
    if let Some(i) = &r.invariants {
        line(format!(
            "pd(J) = {}, im = {}, reg(I) = {}, generators = {}",
            i.pd, i.im, i.reg_edge_ideal, i.b0
        ));
    }
    if let Some(u) = &r.unmixed {
        line(format!(
            "unmixed: {} (free facets: {})",
            if u.is_unmixed { "yes" } else { "no" },
            sets(&u.free_facets)
        ));
        match (&u.closed_form, &u.not_applicable) {
            (Some([b0, b1, b2]), _) => line(format!("closed form: b0={b0} b1={b1} b2={b2}")),
            (None, Some(why)) => line(format!("closed form not applicable: {why}")),
            _ => {}
        }
    }
    if let Some(s) = &r.selftest {
        line(format!(
            "selftest: {} cases, n <= {}, seed {}, {} failures",
            s.cases,
            s.max_n,
            s.seed,
            s.failures.len()
        ));
        for f in &s.failures {
            line(format!("  {f}"));
        }
    }
    for c in &r.cross_checks {
        let detail = c.detail.as_deref().map(|d| format!(" [{d}]")).unwrap_or_default();
        line(format!(
            "check {}: {}{detail}",
            c.name,
            if c.pass { "pass" } else { "FAIL" }
        ));
    }
    if let Some(t) = &r.timings_ms {
        for (k, v) in t {
            line(format!("time {k}: {v:.3} ms"));
        }
    }
    out
}
