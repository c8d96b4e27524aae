//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::process::ExitCode;
use std::time::Instant;

use qlskit::crystal::{component, Tensor};
use qlskit::decomp::lemmas::{verify_diamond, verify_qbg_structure, verify_simple_edges, verify_tilted_lift};
use qlskit::decomp::verify::{
    verify_corollary, verify_degree, verify_degree_consistency, verify_main_theorem, verify_qls_crystal,
    verify_similarity, verify_sls_samples, Options,
};
use qlskit::qls::{QlsCrystal, DEFAULT_CAP};
use qlskit::report::Report;
use qlskit::root_system::WeightVec;
use qlskit::weyl::WeylElt;
use qlskit::{Context, Result};

fn w(c: &[i64]) -> WeightVec {
    WeightVec::from_slice(c)
}

fn all(ctx: &Context) -> Vec<WeylElt> {
    ctx.group().elements().collect()
}

/// The pairs (type, λ, μ) the identities are checked on.
fn grid() -> Vec<(&'static str, WeightVec, WeightVec)> {
    vec![
        ("A1", w(&[1]), w(&[1])),
        ("A1", w(&[2]), w(&[1])),
        ("A2", w(&[1, 0]), w(&[0, 1])),
        ("A2", w(&[1, 0]), w(&[1, 0])),
        ("B2", w(&[1, 0]), w(&[0, 1])),
    ]
}

struct Criterion {
    reports: Vec<Report>,
    notes: Vec<String>,
}

impl Criterion {
    fn new() -> Criterion {
        Criterion { reports: Vec::new(), notes: Vec::new() }
    }

    fn push(&mut self, r: Result<Report>) {
        match r {
            Ok(r) => self.reports.push(r),
            Err(e) => self.notes.push(format!("error: {e}")),
        }
    }

    fn passed(&self) -> bool {
        self.notes.is_empty() && self.reports.iter().all(Report::passed)
    }

    fn cases(&self) -> usize {
        self.reports.iter().map(|r| r.cases).sum()
    }
}

fn main_theorem() -> Criterion {
    let mut c = Criterion::new();
    for (label, lambda, mu) in grid() {
        let ctx = Context::from_label(label).unwrap();
        c.push(verify_main_theorem(&ctx, &lambda, &mu, &all(&ctx), Options::default()));
    }
    c
}

fn degree_and_corollary() -> Criterion {
    let mut c = Criterion::new();
    let mut cases = grid();
    cases.push(("G2", w(&[1, 0]), w(&[0, 1])));
    for (label, lambda, mu) in cases {
        let ctx = Context::from_label(label).unwrap();
        c.push(verify_degree(&ctx, &lambda, &mu, &all(&ctx), Options::default()));
        c.push(verify_corollary(&ctx, &lambda, &mu, &all(&ctx), Options::default()));
    }
    c
}

fn degree_consistency() -> Criterion {
    let mut c = Criterion::new();
    for label in ["A1", "A2", "B2"] {
        let ctx = Context::from_label(label).unwrap();
        let rank = ctx.rank();
        for code in 1..3usize.pow(rank as u32) {
            let coords: Vec<i64> = (0..rank).map(|i| (code / 3usize.pow(i as u32) % 3) as i64).collect();
            c.push(verify_degree_consistency(&ctx, &w(&coords), &all(&ctx), Options::default()));
        }
    }
    c
}

/// Size of the Weyl group orbit of `λ`, with reflections written out from
/// the Cartan matrix rather than taken from the library.
fn orbit_size(cartan: &[Vec<i64>], lambda: &[i64]) -> usize {
    let mut seen = vec![lambda.to_vec()];
    let mut i = 0;
    while i < seen.len() {
        let mu = seen[i].clone();
        for node in 0..cartan.len() {
            let m = mu[node];
            // s_node μ = μ - ⟨μ, α_node^vee⟩ α_node, and α_node has ϖ-coordinates a_{k,node}.
            let next: Vec<i64> = (0..cartan.len()).map(|k| mu[k] - m * cartan[k][node]).collect();
            if !seen.contains(&next) {
                seen.push(next);
            }
        }
        i += 1;
    }
    seen.len()
}

fn cardinalities() -> Criterion {
    let mut c = Criterion::new();
    let a1 = vec![vec![2]];
    let a2 = vec![vec![2, -1], vec![-1, 2]];
    // Every fundamental weight of type A is minuscule, so QLS(ϖ_i) is the orbit
    // of ϖ_i and QLS(λ) is the tensor power of those factors.
    let cases = [
        ("A1", vec![1], 2usize, &a1),
        ("A1", vec![2], 4, &a1),
        ("A2", vec![1, 0], 3, &a2),
        ("A2", vec![1, 1], 9, &a2),
    ];
    for (label, lambda, expect, cartan) in cases {
        let ctx = Context::from_label(label).unwrap();
        let oracle: usize = lambda
            .iter()
            .enumerate()
            .map(|(i, &m)| {
                let mut unit = vec![0; lambda.len()];
                unit[i] = 1;
                orbit_size(cartan, &unit).pow(m as u32)
            })
            .product();
        let fundamentals: Vec<QlsCrystal> = lambda
            .iter()
            .enumerate()
            .flat_map(|(i, &m)| {
                let mut unit = vec![0; lambda.len()];
                unit[i] = 1;
                std::iter::repeat_n(unit, m as usize)
            })
            .map(|unit| QlsCrystal::new(&ctx, w(&unit)).unwrap())
            .collect();
        let tensor = Tensor::new(fundamentals.iter().collect());
        let top: Vec<_> = fundamentals.iter().map(QlsCrystal::highest).collect();
        let tensor_size = component(&tensor, &top, DEFAULT_CAP).map(|v| v.len());
        let crystal = QlsCrystal::new(&ctx, w(&lambda)).unwrap();
        let mut o = qlskit::report::Outcome::default();
        match crystal.enumerate(DEFAULT_CAP) {
            Ok(paths) => {
                let label = format!("{label} lambda={}", w(&lambda));
                o.check(format!("{label} expected"), &paths.len(), &expect, |n| n.to_string());
                o.check(format!("{label} orbit oracle"), &paths.len(), &oracle, |n| n.to_string());
                o.check(format!("{label} tensor oracle"), &Some(paths.len()), &tensor_size, |n| format!("{n:?}"));
            }
            Err(e) => c.notes.push(format!("error: {e}")),
        }
        c.reports.push(Report::new("cardinality", label).with_lambda(w(&lambda)).absorb([o]));
    }
    c
}

fn qbg_structure() -> Criterion {
    let mut c = Criterion::new();
    for label in ["A2", "B2", "G2", "A3"] {
        let ctx = Context::from_label(label).unwrap();
        c.reports.push(verify_qbg_structure(&ctx));
    }
    c
}

fn lemmas() -> Criterion {
    let mut c = Criterion::new();
    for label in ["A2", "B2"] {
        let ctx = Context::from_label(label).unwrap();
        c.reports.push(verify_diamond(&ctx));
        c.reports.push(verify_simple_edges(&ctx));
        c.push(verify_tilted_lift(&ctx));
    }
    c
}

fn crystals() -> Criterion {
    let mut c = Criterion::new();
    let mut shapes: Vec<(&str, WeightVec)> = Vec::new();
    for (label, lambda, mu) in grid() {
        for s in [lambda.clone(), mu.clone(), &lambda + &mu] {
            if !shapes.contains(&(label, s.clone())) {
                shapes.push((label, s));
            }
        }
    }
    for (label, lambda) in &shapes {
        let ctx = Context::from_label(label).unwrap();
        c.push(verify_qls_crystal(&ctx, lambda, Options::default()));
    }
    let samples_each = 1000usize.div_ceil(shapes.len()) + 1;
    let mut total = 0;
    for (k, (label, lambda)) in shapes.iter().enumerate() {
        let ctx = Context::from_label(label).unwrap();
        total += samples_each;
        c.push(verify_sls_samples(&ctx, lambda, samples_each, 1000 + k as u64));
    }
    if total < 1000 {
        c.notes.push(format!("only {total} samples"));
    }
    c
}

fn similarity() -> Criterion {
    let mut c = Criterion::new();
    let a1 = Context::from_label("A1").unwrap();
    c.push(verify_similarity(&a1, &w(&[1]), &w(&[1]), 2, 100, 11, Options::default()));
    let a2 = Context::from_label("A2").unwrap();
    c.push(verify_similarity(&a2, &w(&[1, 0]), &w(&[0, 1]), 2, 100, 12, Options::default()));
    c
}

fn main() -> ExitCode {
    type Check = fn() -> Criterion;
    let criteria: [(&str, Check); 8] = [
        ("main theorem", main_theorem),
        ("degree identity and corollary", degree_and_corollary),
        ("degree consistency", degree_consistency),
        ("cardinalities", cardinalities),
        ("quantum Bruhat graph structure", qbg_structure),
        ("diamond, edge and tilted-lift lemmas", lemmas),
        ("crystal axioms and semi-infinite properties", crystals),
        ("similarity diagrams", similarity),
    ];
    let mut ok = true;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let c = run();
        let verdict = if c.passed() { "PASS" } else { "FAIL" };
        println!("{verdict} {}: {name} ({} cases, {:.1}s)", k + 1, c.cases(), start.elapsed().as_secs_f64());
        if !c.passed() {
            ok = false;
            for r in c.reports.iter().filter(|r| !r.passed()) {
                for line in r.to_string().lines().take(12) {
                    println!("    {line}");
                }
            }
            for n in &c.notes {
                println!("    {n}");
            }
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
