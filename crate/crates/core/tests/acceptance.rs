//! Acceptance suite: eight criteria, one PASS/FAIL line each.
//!
//! Every comparison is exact. A criterion also fails when it runs past its
//! time budget.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use weyl_mahonian::statistics::{run_checks, CheckParams};
use weyl_mahonian::weylgroups::{coxeter_word_length, length, Family, GroupFamily, SignedPerm};

type Jobs = Vec<(String, CheckParams)>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

fn job(name: &str, params: CheckParams) -> (String, CheckParams) {
    (name.to_string(), params)
}

fn by_d(name: &str, ds: std::ops::RangeInclusive<usize>) -> Jobs {
    ds.map(|d| job(name, CheckParams::new().with("d", d))).collect()
}

struct Outcome {
    cases: usize,
    failures: Vec<String>,
}

fn run_jobs(jobs: &Jobs) -> Outcome {
    let mut failures = Vec::new();
    for ((name, params), r) in jobs.iter().zip(run_checks(jobs)) {
        match r {
            Ok(r) if r.passed => {}
            Ok(r) => failures.push(format!("{name} {params}: {}", r.discrepancy.unwrap_or_default())),
            Err(e) => failures.push(format!("{name} {params}: error {e}")),
        }
    }
    Outcome { cases: jobs.len(), failures }
}

fn criterion1() -> Outcome {
    let jobs = [Family::BC, Family::D]
        .into_iter()
        .flat_map(|fam| (1..=4).map(move |d| job("coefficient_table", CheckParams::new().with("family", fam).with("d", d))))
        .collect();
    run_jobs(&jobs)
}

fn criterion2() -> Outcome {
    let mut jobs = Vec::new();
    for (fam, top, euler) in [
        (Family::A, 7, false),
        (Family::BC, 5, false),
        (Family::D, 5, false),
        (Family::A, 7, true),
        (Family::BC, 5, true),
    ] {
        for d in 1..=top {
            jobs.push(job("direct_vs_recursive", CheckParams::new().with("family", fam).with("d", d).with("euler", euler)));
        }
    }
    run_jobs(&jobs)
}

fn criterion3() -> Outcome {
    let jobs = [Family::BC, Family::D]
        .into_iter()
        .flat_map(|fam| (1..=5).map(move |d| job("length_vs_word_length", CheckParams::new().with("family", fam).with("d", d))))
        .collect();
    let mut out = run_jobs(&jobs);
    for (perm, fam, expect) in [("-2,-3,1", Family::BC, 6), ("-2,4,-3,1", Family::D, 8)] {
        let p: SignedPerm = perm.parse().expect("valid literal");
        let g = GroupFamily::new(fam, p.rank());
        let l = length(&p, &g).expect("member");
        let w = coxeter_word_length(&p, &g).expect("member");
        out.cases += 1;
        if (l, w) != (expect, expect) {
            out.failures.push(format!("({perm}) in {fam}: length {l}, word length {w}, expected {expect}"));
        }
    }
    out
}

fn flag_grid() -> Vec<CheckParams> {
    let mut grid = Vec::new();
    for p in [3, 5] {
        for (kind, ds) in [("A", 1..=3), ("C", 2..=2), ("B", 2..=2), ("D", 2..=2)] {
            for d in ds {
                grid.push(CheckParams::new().with("type", kind).with("p", p).with("d", d).with("trunc", 12));
            }
        }
    }
    grid
}

fn criterion4() -> Outcome {
    let jobs = flag_grid()
        .into_iter()
        .flat_map(|g| [false, true].map(|alpha| job("flag_series", g.clone().with("alpha", alpha))))
        .collect();
    run_jobs(&jobs)
}

fn criterion5() -> Outcome {
    let mut jobs = Vec::new();
    for p in [3, 5] {
        for (kind, top) in [("A", 6), ("C", 3), ("B", 2), ("D", 3)] {
            for d in 1..=top {
                jobs.push(job("subspace_counts", CheckParams::new().with("type", kind).with("p", p).with("d", d)));
            }
        }
    }
    run_jobs(&jobs)
}

fn criterion6() -> Outcome {
    let mut jobs: Jobs = [2, 3]
        .into_iter()
        .map(|p| job("canonical_basis_counts", CheckParams::new().with("type", "A").with("p", p).with("d", 3)))
        .collect();
    jobs.push(job("canonical_basis_counts", CheckParams::new().with("type", "C").with("p", 3).with("d", 2)));
    run_jobs(&jobs)
}

fn criterion7() -> Outcome {
    let mut jobs = Vec::new();
    for d in 0..=8 {
        for a in 0..=4 {
            jobs.push(job("qbinomial_theorem", CheckParams::new().with("d", d).with("a", a)));
        }
        jobs.push(job("qbinomial_theorem", CheckParams::new().with("d", d).with("t1", true)));
    }
    jobs.extend(by_d("d_wmaj", 1..=6));
    jobs.extend(by_d("mahonian_q1", 1..=7));
    jobs.extend(by_d("bc_q1", 1..=5));
    jobs.extend(by_d("bc_t1", 1..=5));
    jobs.extend(by_d("d_t1", 1..=6));
    jobs.extend(by_d("even_binomial_identity", 1..=8));
    jobs.extend(by_d("symmetry_A", 1..=7));
    jobs.extend(by_d("bc_reciprocal_symmetry", 1..=5));
    jobs.extend(by_d("low_degree_agreement", 1..=5));
    run_jobs(&jobs)
}

fn criterion8() -> Outcome {
    let mut jobs: Jobs = flag_grid().into_iter().map(|g| job("standard_weights", g)).collect();
    jobs.extend((1..=3).map(|d| job("refinement_counts", CheckParams::new().with("type", "A").with("p", 2).with("d", d))));
    jobs.push(job("rothe_examples", CheckParams::new()));
    run_jobs(&jobs)
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("printed coefficient tables", criterion1, Duration::from_secs(1)),
        ("direct enumeration equals recursion", criterion2, Duration::from_secs(60)),
        ("length equals Cayley distance", criterion3, Duration::from_secs(30)),
        ("flag series over F_3 and F_5", criterion4, Duration::from_secs(300)),
        ("subspace counting formulas", criterion5, Duration::from_secs(300)),
        ("canonical basis counts", criterion6, Duration::from_secs(300)),
        ("closed-form identities", criterion7, Duration::from_secs(300)),
        ("standard weights, refinements, Rothe tallies", criterion8, Duration::from_secs(300)),
    ];
    let mut all = true;
    for (i, (title, f, budget)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let out = f();
        let elapsed = start.elapsed();
        let in_time = elapsed <= budget;
        let ok = out.failures.is_empty() && in_time;
        all &= ok;
        let verdict = if ok { "PASS" } else { "FAIL" };
        println!(
            "criterion {}: {verdict}  {title} ({} cases, {:.2} s of {} s)",
            i + 1,
            out.cases,
            elapsed.as_secs_f64(),
            budget.as_secs()
        );
        for f in &out.failures {
            println!("    {f}");
        }
        if !in_time {
            println!("    over the time budget");
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
