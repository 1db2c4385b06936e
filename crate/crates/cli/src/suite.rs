//! The acceptance suite: thirteen groups of exact checks.

use std::time::Instant;

use glweb::dotu::{check_dot_relation, relation_instances, weights};
use glweb::functor::GammaContext;
use glweb::qalg::{qf, LaurentFraction};
use glweb::verify::catalog::instances;
use glweb::verify::corpus::{random_closed, random_web};
use glweb::verify::*;
use glweb::webcat::build::{bend, thick_cross_up, thick_merge, thick_split, unbend};
use glweb::webcat::{Orient, Sense, WebExpr};
use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

type Task = Box<dyn Fn() -> Report + Send + Sync>;

/// Bounds on the suite; `max_n` drops every check above that rank.
#[derive(Clone, Copy, Debug, Default)]
pub struct Limits {
    pub max_n: Option<usize>,
}

impl Limits {
    fn ns(&self, ns: impl IntoIterator<Item = usize>) -> Vec<usize> {
        ns.into_iter().filter(|&n| self.max_n.map_or(true, |m| n <= m)).collect()
    }
}

pub struct Criterion {
    pub id: usize,
    pub title: &'static str,
    tasks: fn(&Limits) -> Vec<Task>,
}

pub struct Outcome {
    pub id: usize,
    pub title: &'static str,
    pub reports: Vec<Report>,
    pub seconds: f64,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.reports.iter().all(Report::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Report> + '_ {
        self.reports.iter().filter(|r| !r.passed())
    }

    /// One line: status, number, title, counts and time.
    pub fn line(&self) -> String {
        let bad = self.failures().count();
        let status = if bad == 0 { "PASS" } else { "FAIL" };
        format!(
            "{} {:>2}. {} ({} checks, {} failed, {:.2}s)",
            status,
            self.id,
            self.title,
            self.reports.len(),
            bad,
            self.seconds
        )
    }
}

fn task(f: impl Fn() -> Report + Send + Sync + 'static) -> Task {
    Box::new(f)
}

fn catalog(rel: Rel, params: &[usize], n: usize) -> Task {
    let id = RelationId::new(rel, params);
    task(move || check(&id, n))
}

fn circles(l: &Limits) -> Vec<Task> {
    let mut out = Vec::new();
    for n in l.ns(2..=5) {
        out.push(catalog(Rel::Circle1, &[], n));
        out.push(catalog(Rel::Circle1Rev, &[], n));
    }
    out
}

fn thick_circles(l: &Limits) -> Vec<Task> {
    let mut out = Vec::new();
    for n in l.ns(2..=3) {
        for k in 1..=3 {
            out.push(catalog(Rel::CircleK, &[k], n));
        }
    }
    out
}

fn dumbbells(l: &Limits) -> Vec<Task> {
    let mut out = Vec::new();
    for n in l.ns(2..=3) {
        out.push(catalog(Rel::DumbbellSide, &[], n));
        for k in 1..=2 {
            for m in 1..=2 {
                out.push(catalog(Rel::DumbbellKl, &[k, m], n));
            }
        }
    }
    out
}

fn relations(l: &Limits) -> Vec<Task> {
    let mut out = Vec::new();
    for n in l.ns(1..=3) {
        for &rel in Rel::ALL.iter().filter(|r| !r.is_integral()) {
            for id in instances(rel, 3) {
                out.push(task(move || check(&id, n)));
            }
        }
    }
    out
}

fn serre(l: &Limits) -> Vec<Task> {
    l.ns([2]).into_iter().flat_map(|n| [catalog(Rel::SerreWeb, &[2, 1, 1], n), catalog(Rel::SerreWeb, &[2, 1, 2], n)]).collect()
}

/// The split scalar exactly as it is usually printed, `q^{-+kl/n + kl}`.
pub fn printed_split_scalar(n: usize, k: usize, l: usize, s: Sense) -> LaurentFraction {
    let (n, kl) = (n as i64, (k * l) as i64);
    let e = if s == Sense::Over { kl * n - kl } else { kl * n + kl };
    qf(e, n as u32)
}

/// Name of the sub-checks comparing against [`printed_split_scalar`].
pub const PRINTED_SPLIT: &str = "split-cross-printed";

fn printed_split_check(n: usize, k: usize, l: usize, s: Sense) -> Report {
    let ctx = GammaContext::new(n);
    let v = printed_split_scalar(n, k, l, s);
    let parts = [
        ("split", thick_cross_up(l, k, s).compose(&thick_split(l, k, Orient::Up)), thick_split(k, l, Orient::Up)),
        ("merge", thick_merge(l, k, Orient::Up).compose(&thick_cross_up(k, l, s)), thick_merge(k, l, Orient::Up)),
    ];
    let reports = parts.into_iter().map(|(what, a, b): (&str, Result<WebExpr, glweb::Error>, WebExpr)| {
        let p = format!("n={} k={},l={} {:?} {}", n, k, l, s, what);
        match a.and_then(|a| Ok((ctx.expr(&a)?, ctx.expr(&b.scale(&v))?))) {
            Ok((x, y)) => Report::matrices(PRINTED_SPLIT, p, &x, &y),
            Err(e) => Report::fail(PRINTED_SPLIT, p, e.to_string()),
        }
    });
    let mut r = Report::all(PRINTED_SPLIT, format!("n={} k={},l={} {:?}", n, k, l, s), reports.collect::<Vec<_>>());
    if r.passed() {
        r.lhs = v.to_string();
        r.rhs = v.to_string();
    }
    r
}

fn twists(l: &Limits) -> Vec<Task> {
    let mut out = Vec::new();
    for n in l.ns(2..=3) {
        out.push(catalog(Rel::R1Thin, &[], n));
        for k in 1..=2 {
            out.push(catalog(Rel::R1Thick, &[k], n));
            for m in 1..=2 {
                out.push(catalog(Rel::SplitCross, &[k, m], n));
                for s in [Sense::Over, Sense::Under] {
                    out.push(task(move || printed_split_check(n, k, m, s)));
                }
            }
        }
    }
    out
}

fn closures(l: &Limits) -> Vec<Task> {
    l.ns(2..=4).into_iter().map(|n| task(move || closures_report(n))).collect()
}

fn projectors(l: &Limits) -> Vec<Task> {
    let mut out = Vec::new();
    for n in l.ns(2..=3) {
        for k in 1..=4 {
            out.push(task(move || projector_report(k, n)));
        }
        for k in 3..=4 {
            out.push(catalog(Rel::JwRecursion, &[k], n));
        }
    }
    out
}

fn dot_relations(l: &Limits) -> Vec<Task> {
    let mut out = Vec::new();
    for n in l.ns(1..=3) {
        for m in 2..=3 {
            for rel in relation_instances(m, 2) {
                let ks = weights(m, 3);
                out.push(task(move || {
                    let ctx = GammaContext::new(n);
                    let r = Report::all(rel.family(), format!("n={} m={} {:?}", n, m, rel), ks.iter().map(|k| check_dot_relation(&rel, k, &ctx)));
                    r
                }));
            }
        }
    }
    out
}

fn integral(l: &Limits) -> Vec<Task> {
    l.ns(2..=3).into_iter().map(|n| task(move || int_suite(n))).collect()
}

fn oracle(l: &Limits) -> Vec<Task> {
    let mut out = Vec::new();
    for n in l.ns(2..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed + n as u64);
        for i in 0..200 {
            let d = random_closed(&mut rng, 6);
            out.push(task(move || {
                let ctx = GammaContext::new(n);
                let g = LaurentFraction::from(ctx.diagram(&d).get(0, 0));
                let p = format!("n={} sample={}", n, i);
                match eval_closed_rewrite(&d, n) {
                    Ok(v) => Report::scalars("rewrite-vs-gamma", p, &v, &g),
                    Err(e) => Report::fail("rewrite-vs-gamma", p, e.to_string()),
                }
            }));
        }
    }
    out
}

/// The specialization points used for ranks.
pub fn rank_points() -> Vec<BigRational> {
    [(3, 2), (5, 3), (2, 1)].iter().map(|&(a, b)| BigRational::new(a.into(), b.into())).collect()
}

fn hom_dims(l: &Limits) -> Vec<Task> {
    let mut out = Vec::new();
    for n in l.ns([2]) {
        for (k, expect) in [(2usize, 2usize), (3, 5)] {
            out.push(task(move || independence_report(&thin_span(k), n, &rank_points())));
            out.push(task(move || {
                let parts = rank_points().into_iter().map(|u0| {
                    let p = format!("n={} k={} u0={}", n, k, u0);
                    match rank_of_span(&thin_span(k), n, &u0) {
                        Ok(r) => Report::scalars("hom-dim", p, &r, &expect),
                        Err(e) => Report::fail("hom-dim", p, e.to_string()),
                    }
                });
                Report::all("hom-dim", format!("n={} k={}", n, k), parts.collect::<Vec<_>>())
            }));
        }
    }
    out
}

fn bends(l: &Limits) -> Vec<Task> {
    let mut out = Vec::new();
    for n in l.ns([2]) {
        let mut rng = ChaCha8Rng::seed_from_u64(0xbe4d);
        for i in 0..50 {
            let w = WebExpr::term(LaurentFraction::from_int(1), random_web(&mut rng, 5));
            out.push(task(move || {
                let ctx = GammaContext::new(n);
                let p = format!("n={} sample={}", n, i);
                let back = match unbend(&bend(&w), w.dom()) {
                    Ok(b) => b,
                    Err(e) => return Report::fail("bend-round-trip", p, e.to_string()),
                };
                match (ctx.expr(&back), ctx.expr(&w)) {
                    (Ok(a), Ok(b)) => Report::matrices("bend-round-trip", p, &a, &b),
                    (Err(e), _) | (_, Err(e)) => Report::fail("bend-round-trip", p, e.to_string()),
                }
            }));
        }
    }
    out
}

pub fn criteria() -> Vec<Criterion> {
    let c = |id, title, tasks| Criterion { id, title, tasks };
    vec![
        c(1, "circle evaluations", circles as fn(&Limits) -> Vec<Task>),
        c(2, "thick circles", thick_circles),
        c(3, "dumbbell removals", dumbbells),
        c(4, "relation catalog", relations),
        c(5, "Serre web", serre),
        c(6, "twist scalars", twists),
        c(7, "two closures differ", closures),
        c(8, "projectors", projectors),
        c(9, "idempotented-form relations", dot_relations),
        c(10, "integral mode", integral),
        c(11, "rewrite oracle agreement", oracle),
        c(12, "hom dimensions", hom_dims),
        c(13, "dualization round trip", bends),
    ]
}

/// Runs the chosen criteria on `jobs` threads. Results come back in a fixed
/// order whatever the scheduling.
pub fn run(which: &[Criterion], limits: &Limits, jobs: usize) -> Vec<Outcome> {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build().expect("thread pool");
    which
        .iter()
        .map(|c| {
            let start = Instant::now();
            let tasks = (c.tasks)(limits);
            let reports: Vec<Report> = pool.install(|| tasks.par_iter().map(|t| t()).collect());
            Outcome { id: c.id, title: c.title, reports, seconds: start.elapsed().as_secs_f64() }
        })
        .collect()
}

pub fn manifest(outcomes: &[Outcome]) -> Value {
    let crit: Vec<Value> = outcomes
        .iter()
        .map(|o| {
            json!({
                "criterion": o.id,
                "title": o.title,
                "passed": o.passed(),
                "seconds": o.seconds,
                "checks": o.reports.iter().map(crate::json::report).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({ "passed": outcomes.iter().all(Outcome::passed), "criteria": crit })
}
