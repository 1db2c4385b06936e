//! Lusztig's idempotented `U_q(gl_m)` as free words of divided powers, and
//! the ladder functor into upward webs.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::functor::GammaContext;
use crate::qalg::{qbinom, LaurentFraction};
use crate::verify::{Report, Status};
use crate::webcat::build::{ladder_e, ladder_f};
use crate::webcat::{WebExpr, WebObject};

/// A `gl_m`-weight.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GlmWeight(pub Vec<i64>);

impl GlmWeight {
    pub fn new(v: &[i64]) -> Self {
        GlmWeight(v.to_vec())
    }

    pub fn m(&self) -> usize {
        self.0.len()
    }

    /// `alpha_i = e_i - e_{i+1}`, `i` one-based.
    pub fn alpha(m: usize, i: usize) -> GlmWeight {
        let mut v = alloc::vec![0; m];
        v[i - 1] = 1;
        v[i] = -1;
        GlmWeight(v)
    }

    pub fn shifted(&self, i: usize, by: i64) -> GlmWeight {
        let mut v = self.0.clone();
        v[i - 1] += by;
        v[i] -= by;
        GlmWeight(v)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&k| k >= 0)
    }

    /// The web object: labels in order with the zeros removed. `None` for
    /// weights with a negative entry (the zero object).
    pub fn object(&self) -> Option<WebObject> {
        if !self.is_nonnegative() {
            return None;
        }
        let ls: Vec<usize> = self.0.iter().map(|&k| k as usize).collect();
        Some(WebObject::up(&ls))
    }
}

impl fmt::Display for GlmWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, k) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", k)?;
        }
        f.write_str("]")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    E,
    F,
}

/// `E_i^(j)` or `F_i^(j)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub kind: Kind,
    pub i: usize,
    pub power: usize,
}

impl Letter {
    pub fn e(i: usize, power: usize) -> Self {
        Letter { kind: Kind::E, i, power }
    }

    pub fn f(i: usize, power: usize) -> Self {
        Letter { kind: Kind::F, i, power }
    }

    fn act(&self, k: &GlmWeight) -> GlmWeight {
        let j = self.power as i64;
        match self.kind {
            Kind::E => k.shifted(self.i, j),
            Kind::F => k.shifted(self.i, -j),
        }
    }
}

/// A word `X_1 X_2 .. X_r 1_k`; the rightmost letter acts first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DotWord {
    pub base: GlmWeight,
    pub letters: Vec<Letter>,
}

impl DotWord {
    pub fn new(base: GlmWeight, letters: Vec<Letter>) -> Self {
        DotWord { base, letters }
    }

    /// Weights visited, starting with the base.
    pub fn weights(&self) -> Vec<GlmWeight> {
        let mut out = alloc::vec![self.base.clone()];
        for l in self.letters.iter().rev() {
            let next = l.act(out.last().unwrap());
            out.push(next);
        }
        out
    }

    pub fn target(&self) -> GlmWeight {
        self.weights().pop().unwrap()
    }
}

impl fmt::Display for DotWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            let k = if l.kind == Kind::E { "El" } else { "Fl" };
            write!(f, "{}({},{}) ", k, l.i, l.power)?;
        }
        write!(f, "@{}", self.base)
    }
}

/// One ladder rung acting on the strands of weight `k`.
fn rung(l: &Letter, k: &GlmWeight) -> WebExpr {
    let ls: Vec<usize> = k.0.iter().map(|&x| x as usize).collect();
    let (a, b) = (ls[l.i - 1], ls[l.i]);
    let left = WebExpr::id(&WebObject::up(&ls[..l.i - 1]));
    let right = WebExpr::id(&WebObject::up(&ls[l.i + 1..]));
    let mid = match l.kind {
        Kind::F => ladder_f(l.power, a, b),
        Kind::E => ladder_e(l.power, a, b),
    };
    left.tensor(&mid).tensor(&right)
}

/// The ladder functor. Words passing through a weight with a negative entry
/// go to zero; zero-labelled edges are erased.
pub fn a_mn(w: &DotWord) -> WebExpr {
    let ws = w.weights();
    let dom = w.base.object().unwrap_or_else(WebObject::empty);
    let cod = ws.last().unwrap().object().unwrap_or_else(WebObject::empty);
    if ws.iter().any(|k| !k.is_nonnegative()) {
        return WebExpr::zero(dom, cod);
    }
    let mut acc = WebExpr::id(&dom);
    for (l, k) in w.letters.iter().rev().zip(&ws) {
        acc = rung(l, k).compose(&acc).expect("ladder boundaries follow the weights");
    }
    acc
}

/// A linear combination of words with a common base.
pub type DotSum = Vec<(LaurentFraction, DotWord)>;

fn a_sum(s: &DotSum, base: &GlmWeight, target: &GlmWeight) -> WebExpr {
    let dom = base.object().unwrap_or_else(WebObject::empty);
    let cod = target.object().unwrap_or_else(WebObject::empty);
    let mut acc = WebExpr::zero(dom, cod);
    for (c, w) in s {
        acc = acc.add(&a_mn(w).scale(c)).expect("terms share boundary");
    }
    acc
}

/// The defining relations of the idempotented form, each with its
/// parameters. All act on the base weight `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DotRelation {
    /// `X_a^(j1) X_b^(j2) = X_b^(j2) X_a^(j1)`, `|a-b| > 1`.
    FarCommute { kind: Kind, a: usize, j1: usize, b: usize, j2: usize },
    /// `F_a^(j1) E_b^(j2) = E_b^(j2) F_a^(j1)`, `a != b`.
    MixedCommute { a: usize, j1: usize, b: usize, j2: usize },
    /// `X_a X_b X_a = X_a^(2) X_b + X_b X_a^(2)`, `|a-b| = 1`.
    Serre { kind: Kind, a: usize, b: usize },
    /// `X_i^(j1) X_i^(j2) = [j1+j2, j1] X_i^(j1+j2)`.
    DividedPowers { kind: Kind, i: usize, j1: usize, j2: usize },
    /// `E^(j2) F^(j1)` reordered with binomial weights (`kind = E`), or
    /// `F^(j1) E^(j2)` reordered (`kind = F`).
    SquareSwitch { kind: Kind, i: usize, j1: usize, j2: usize },
}

impl DotRelation {
    pub fn family(&self) -> &'static str {
        match self {
            DotRelation::FarCommute { .. } => "dot-far-commute",
            DotRelation::MixedCommute { .. } => "dot-mixed-commute",
            DotRelation::Serre { .. } => "dot-serre",
            DotRelation::DividedPowers { .. } => "dot-divided-powers",
            DotRelation::SquareSwitch { .. } => "dot-square-switch",
        }
    }

    /// Both sides at base weight `k`.
    pub fn sides(&self, k: &GlmWeight) -> (DotSum, DotSum) {
        let one = LaurentFraction::from_int(1);
        let w = |ls: Vec<Letter>| DotWord::new(k.clone(), ls);
        let x = |kind: Kind, i: usize, j: usize| Letter { kind, i, power: j };
        match *self {
            DotRelation::FarCommute { kind, a, j1, b, j2 } => (
                alloc::vec![(one.clone(), w(alloc::vec![x(kind, a, j1), x(kind, b, j2)]))],
                alloc::vec![(one, w(alloc::vec![x(kind, b, j2), x(kind, a, j1)]))],
            ),
            DotRelation::MixedCommute { a, j1, b, j2 } => (
                alloc::vec![(one.clone(), w(alloc::vec![Letter::f(a, j1), Letter::e(b, j2)]))],
                alloc::vec![(one, w(alloc::vec![Letter::e(b, j2), Letter::f(a, j1)]))],
            ),
            DotRelation::Serre { kind, a, b } => (
                alloc::vec![(one.clone(), w(alloc::vec![x(kind, a, 1), x(kind, b, 1), x(kind, a, 1)]))],
                alloc::vec![
                    (one.clone(), w(alloc::vec![x(kind, a, 2), x(kind, b, 1)])),
                    (one, w(alloc::vec![x(kind, b, 1), x(kind, a, 2)])),
                ],
            ),
            DotRelation::DividedPowers { kind, i, j1, j2 } => (
                alloc::vec![(one, w(alloc::vec![x(kind, i, j1), x(kind, i, j2)]))],
                alloc::vec![(qbinom((j1 + j2) as i64, j1 as u32).into(), w(alloc::vec![x(kind, i, j1 + j2)]))],
            ),
            DotRelation::SquareSwitch { kind, i, j1, j2 } => {
                let lambda = k.0[i - 1] - k.0[i];
                let (j1i, j2i) = (j1 as i64, j2 as i64);
                let mut rhs = Vec::new();
                for t in 0..=j1.min(j2) {
                    let (a, b) = (j1 - t, j2 - t);
                    match kind {
                        // E^(j2) F^(j1) 1_k = sum [lambda - j1 + j2, t] F^(j1-t) E^(j2-t) 1_k
                        Kind::E => rhs.push((
                            qbinom(lambda - j1i + j2i, t as u32).into(),
                            w(alloc::vec![Letter::f(i, a), Letter::e(i, b)]),
                        )),
                        // F^(j1) E^(j2) 1_k = sum [-lambda + j1 - j2, t] E^(j2-t) F^(j1-t) 1_k
                        Kind::F => rhs.push((
                            qbinom(-lambda + j1i - j2i, t as u32).into(),
                            w(alloc::vec![Letter::e(i, b), Letter::f(i, a)]),
                        )),
                    }
                }
                let lhs = match kind {
                    Kind::E => w(alloc::vec![Letter::e(i, j2), Letter::f(i, j1)]),
                    Kind::F => w(alloc::vec![Letter::f(i, j1), Letter::e(i, j2)]),
                };
                // zero powers are identities
                let strip = |d: DotWord| DotWord::new(d.base, d.letters.into_iter().filter(|l| l.power > 0).collect());
                (
                    alloc::vec![(one, strip(lhs))],
                    rhs.into_iter().map(|(c, d)| (c, strip(d))).collect(),
                )
            }
        }
    }

    fn params(&self) -> String {
        let kd = |k: Kind| if k == Kind::E { "E" } else { "F" };
        match *self {
            DotRelation::FarCommute { kind, a, j1, b, j2 } => format!("{} a={} j1={} b={} j2={}", kd(kind), a, j1, b, j2),
            DotRelation::MixedCommute { a, j1, b, j2 } => format!("a={} j1={} b={} j2={}", a, j1, b, j2),
            DotRelation::Serre { kind, a, b } => format!("{} a={} b={}", kd(kind), a, b),
            DotRelation::DividedPowers { kind, i, j1, j2 } => format!("{} i={} j1={} j2={}", kd(kind), i, j1, j2),
            DotRelation::SquareSwitch { kind, i, j1, j2 } => format!("{} i={} j1={} j2={}", kd(kind), i, j1, j2),
        }
    }
}

/// Checks `gamma(a_mn(lhs)) == gamma(a_mn(rhs))` at base weight `k`.
pub fn check_dot_relation(rel: &DotRelation, k: &GlmWeight, ctx: &GammaContext) -> Report {
    let params = format!("n={} k={} {}", ctx.n, k, rel.params());
    let (lhs, rhs) = rel.sides(k);
    let target = lhs.first().map(|(_, w)| w.target()).unwrap_or_else(|| k.clone());
    if k.object().is_none() || target.object().is_none() {
        let mut r = Report::new(rel.family(), params).with_note("zero object at an endpoint; 0 = 0");
        r.status = Status::Pass;
        return r;
    }
    let (l, r) = (a_sum(&lhs, k, &target), a_sum(&rhs, k, &target));
    match (ctx.expr(&l), ctx.expr(&r)) {
        (Ok(a), Ok(b)) => Report::matrices(rel.family(), params, &a, &b),
        (Err(e), _) | (_, Err(e)) => Report::fail(rel.family(), params, format!("{}", e)),
    }
}

/// Every relation instance with `m` strands, powers up to `max_power`.
pub fn relation_instances(m: usize, max_power: usize) -> Vec<DotRelation> {
    let mut out = Vec::new();
    let ps = 1..=max_power;
    for kind in [Kind::E, Kind::F] {
        for a in 1..m {
            for b in 1..m {
                if a.abs_diff(b) > 1 {
                    for j1 in ps.clone() {
                        for j2 in ps.clone() {
                            out.push(DotRelation::FarCommute { kind, a, j1, b, j2 });
                        }
                    }
                }
                if a.abs_diff(b) == 1 {
                    out.push(DotRelation::Serre { kind, a, b });
                }
            }
            for j1 in ps.clone() {
                for j2 in ps.clone() {
                    out.push(DotRelation::DividedPowers { kind, i: a, j1, j2 });
                    out.push(DotRelation::SquareSwitch { kind, i: a, j1, j2 });
                }
            }
        }
    }
    for a in 1..m {
        for b in 1..m {
            if a != b {
                for j1 in ps.clone() {
                    for j2 in ps.clone() {
                        out.push(DotRelation::MixedCommute { a, j1, b, j2 });
                    }
                }
            }
        }
    }
    out
}

/// All weights in `{0..=max}^m`.
pub fn weights(m: usize, max: i64) -> Vec<GlmWeight> {
    let mut out = alloc::vec![Vec::new()];
    for _ in 0..m {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i64>| {
                (0..=max).map(move |k| {
                    let mut w = v.clone();
                    w.push(k);
                    w
                })
            })
            .collect();
    }
    out.into_iter().map(GlmWeight).collect()
}
