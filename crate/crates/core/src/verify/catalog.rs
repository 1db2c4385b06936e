//! The relation catalog: every relation and lemma as an exact matrix check.
//!
//! Each [`Rel`] takes up to three labels (`k`, `l`, `m`; the integral
//! dumbbell-crossing relations call the third one `r`). Unused labels are
//! ignored.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::dotu::{a_mn, check_dot_relation, DotRelation, DotWord, GlmWeight, Kind, Letter};
use crate::functor::{gamma_integral_audit, GammaContext};
use crate::qalg::{qbinom, qf, qint, qtrinom, LaurentFraction, LaurentPoly};
use crate::verify::Report;
use crate::webcat::build::*;
use crate::webcat::{compose_all, tensor_all, CrossDir, Gen, Orient, Sense, Strand, WebExpr, WebObject};
use crate::Error;

macro_rules! rels {
    ($($v:ident => $s:literal [$($key:literal),*],)*) => {
        /// Identifier of a catalog entry.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum Rel { $($v),* }

        impl Rel {
            pub const ALL: &'static [Rel] = &[$(Rel::$v),*];

            pub fn name(self) -> &'static str {
                match self { $(Rel::$v => $s),* }
            }

            /// The labels this relation reads, in order.
            pub fn keys(self) -> &'static [&'static str] {
                match self { $(Rel::$v => &[$($key),*]),* }
            }
        }

        impl FromStr for Rel {
            type Err = Error;
            fn from_str(s: &str) -> Result<Rel, Error> {
                match s {
                    $($s => Ok(Rel::$v),)*
                    _ => Err(Error::InvalidArgument(format!("unknown relation id `{}`", s))),
                }
            }
        }
    };
}

rels! {
    Coassoc => "coassoc" ["k", "l"],
    SquareSwitchThin => "square-switch-thin" ["k", "l"],
    DigonThin => "digon-thin" ["k"],
    DigonThick => "digon-thick" ["k", "l"],
    CoassocThick => "coassoc-thick" ["k", "l", "m"],
    SquareSwitchThick => "square-switch-thick" ["k", "l"],
    DividedPowers => "divided-powers" ["k", "l"],
    SerreWeb => "serre-web" ["k", "l", "m"],
    R2R3Thin => "R2R3-thin" [],
    R2R3Thick => "R2R3-thick" ["k", "l", "m"],
    InvLeftward => "inv-leftward" [],
    LeftRightInverse => "leftright-inverse" ["k", "l"],
    ZigzagThin => "zigzag-thin" [],
    ZigzagThick => "zigzag-thick" ["k"],
    ZigzagOther => "zigzag-other" ["k"],
    Slides => "slides" ["k"],
    SlidesThick => "slides-thick" ["k", "l"],
    DownMergeDef => "down-merge-def" ["k", "l"],
    Circle1 => "circle-1" [],
    Circle1Rev => "circle-1-rev" [],
    CircleK => "circle-k" ["k"],
    DumbbellSide => "dumbbell-side" [],
    DumbbellKl => "dumbbell-kl" ["k", "l"],
    R1Thin => "R1-thin" [],
    R1Thick => "R1-thick" ["k"],
    Pitchfork => "pitchfork" ["k", "l", "m"],
    DumbbellSlide => "dumbbell-slide" ["k", "l", "m"],
    SplitCross => "split-cross" ["k", "l"],
    JwRecursion => "jw-recursion" ["k"],
    IntCoassoc => "int-coassoc" ["k", "l", "m"],
    IntDigon => "int-digon" ["k", "l"],
    IntDumcross => "int-dumcross" ["k", "l", "r"],
    IntSqswitch => "int-sqswitch" ["k", "l"],
    CrossRedundant => "cross-redundant" ["k", "l"],
    SqswitchImpliesDumcross => "sqswitch-implies-dumcross" ["k", "l", "r"],
}

impl fmt::Display for Rel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Rel {
    /// Catalog entries that live in the integral category.
    pub fn is_integral(self) -> bool {
        matches!(
            self,
            Rel::IntCoassoc | Rel::IntDigon | Rel::IntDumcross | Rel::IntSqswitch | Rel::CrossRedundant | Rel::SqswitchImpliesDumcross
        )
    }
}

/// A catalog entry with its labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationId {
    pub rel: Rel,
    pub params: [usize; 3],
}

impl RelationId {
    pub fn new(rel: Rel, params: &[usize]) -> Self {
        let mut p = [1; 3];
        for (i, &v) in params.iter().take(3).enumerate() {
            p[i] = v;
        }
        RelationId { rel, params: p }
    }

    /// Parses `k=1,l=2` style parameter lists; missing keys default to 1.
    pub fn with_params(rel: Rel, text: &str) -> Result<Self, Error> {
        let mut p = [1; 3];
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, val) = item.split_once('=').ok_or_else(|| Error::InvalidArgument(format!("expected key=value, got `{}`", item)))?;
            let key = if key.trim() == "r" { "m" } else { key.trim() };
            let pos = rel
                .keys()
                .iter()
                .map(|k| if *k == "r" { "m" } else { *k })
                .position(|k| k == key)
                .ok_or_else(|| Error::InvalidArgument(format!("{} takes no parameter `{}`", rel, key)))?;
            p[pos] = val.trim().parse().map_err(|_| Error::InvalidArgument(format!("bad value `{}`", val)))?;
        }
        Ok(RelationId { rel, params: p })
    }

    pub fn k(&self) -> usize {
        self.params[0]
    }
    pub fn l(&self) -> usize {
        self.params[1]
    }
    pub fn m(&self) -> usize {
        self.params[2]
    }
}

impl fmt::Display for RelationId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.rel.keys().iter().zip(self.params).map(|(k, v)| format!("{}={}", k, v)).collect();
        f.write_str(&parts.join(","))
    }
}

fn g(x: Gen) -> WebExpr {
    WebExpr::gen(x)
}

fn id(s: &[Strand]) -> WebExpr {
    WebExpr::id(&WebObject::new(s.iter().copied()))
}

fn up(k: usize) -> Strand {
    Strand::up(k)
}

fn down(k: usize) -> Strand {
    Strand::down(k)
}

/// Composes bottom to top; the builders only produce matching boundaries.
fn seq(bottom_up: &[WebExpr]) -> WebExpr {
    compose_all(bottom_up).expect("catalog boundaries agree")
}

fn frac(x: LaurentPoly) -> LaurentFraction {
    x.into()
}

struct Ck<'a> {
    ctx: &'a GammaContext,
    name: String,
    params: String,
    parts: Vec<Report>,
    // the first scalar compared, shown as the report's value
    value: Option<(String, String)>,
}

impl<'a> Ck<'a> {
    fn new(ctx: &'a GammaContext, id: &RelationId) -> Self {
        Ck { ctx, name: id.rel.name().to_string(), params: format!("n={} {}", ctx.n, id), parts: Vec::new(), value: None }
    }

    fn eq(&mut self, what: &str, a: &WebExpr, b: &WebExpr) {
        let p = format!("{} {}", self.params, what);
        let r = match (self.ctx.expr(a), self.ctx.expr(b)) {
            (Ok(x), Ok(y)) => Report::matrices(self.name.clone(), p, &x, &y),
            (Err(e), _) | (_, Err(e)) => Report::fail(self.name.clone(), p, e.to_string()),
        };
        self.parts.push(r);
    }

    fn eq_scaled(&mut self, what: &str, a: &WebExpr, c: &LaurentFraction, b: &WebExpr) {
        self.value.get_or_insert_with(|| (c.to_string(), c.to_string()));
        self.eq(what, a, &b.scale(c));
    }

    fn zero(&mut self, what: &str, a: &WebExpr) {
        self.eq(what, a, &WebExpr::zero(a.dom().clone(), a.cod().clone()));
    }

    fn scalar(&mut self, what: &str, w: &WebExpr, expect: &LaurentFraction) {
        let p = format!("{} {}", self.params, what);
        let r = match self.ctx.scalar(w) {
            Ok(v) => {
                self.value.get_or_insert_with(|| (v.to_string(), expect.to_string()));
                Report::scalars(self.name.clone(), p, &v, expect)
            }
            Err(e) => Report::fail(self.name.clone(), p, e.to_string()),
        };
        self.parts.push(r);
    }

    fn integral(&mut self, what: &str, w: &WebExpr) {
        let mut r = gamma_integral_audit(w, self.ctx);
        r.params = format!("{} {} {}", self.params, what, r.params);
        self.parts.push(r);
    }

    fn push(&mut self, r: Report) {
        self.parts.push(r);
    }

    fn done(self) -> Report {
        let mut r = Report::all(self.name, self.params, self.parts);
        if let (true, Some((l, rr))) = (r.passed(), self.value) {
            r.lhs = l;
            r.rhs = rr;
        }
        if r.passed() && r.lhs.is_empty() {
            r.lhs = "ok".into();
        }
        r
    }
}

/// Checks one catalog entry at rank `n`.
pub fn check(id: &RelationId, n: usize) -> Report {
    let ctx = if id.rel.is_integral() { GammaContext::integral(n) } else { GammaContext::new(n) };
    check_with(id, &ctx)
}

const SENSES: [Sense; 2] = [Sense::Over, Sense::Under];
const ORIENTS: [Orient; 2] = [Orient::Up, Orient::Down];

/// Checks one catalog entry with an existing context.
pub fn check_with(rid: &RelationId, ctx: &GammaContext) -> Report {
    let (k, l, m) = (rid.k(), rid.l(), rid.m());
    let n = ctx.n;
    let mut c = Ck::new(ctx, rid);
    match rid.rel {
        Rel::Coassoc => assoc(&mut c, k, 1, l),
        Rel::CoassocThick | Rel::IntCoassoc => {
            assoc(&mut c, k, l, m);
            if rid.rel == Rel::IntCoassoc {
                audit_thick_gens(&mut c, &[(k, l), (k + l, m), (l, m), (k, l + m)]);
            }
        }
        Rel::SquareSwitchThin => {
            for kind in [Kind::E, Kind::F] {
                c.push(check_dot_relation(&DotRelation::SquareSwitch { kind, i: 1, j1: 1, j2: 1 }, &weight2(k, l), ctx));
            }
            // EF - FE = [k-l] id, spelled out
            if k >= 1 && l >= 1 {
                let ef = a_mn(&DotWord::new(weight2(k, l), vec![Letter::e(1, 1), Letter::f(1, 1)]));
                let fe = a_mn(&DotWord::new(weight2(k, l), vec![Letter::f(1, 1), Letter::e(1, 1)]));
                let lam = frac(qint(k as i64 - l as i64));
                c.eq("EF-FE", &ef.sub(&fe).expect("same boundary"), &id(&[up(k), up(l)]).scale(&lam));
            }
        }
        Rel::SquareSwitchThick | Rel::IntSqswitch => {
            for kind in [Kind::E, Kind::F] {
                for j1 in 1..=2 {
                    for j2 in 1..=2 {
                        let rel = DotRelation::SquareSwitch { kind, i: 1, j1, j2 };
                        c.push(check_dot_relation(&rel, &weight2(k, l), ctx));
                    }
                }
            }
            if rid.rel == Rel::IntSqswitch {
                audit_thick_gens(&mut c, &[(k, l)]);
            }
        }
        Rel::DividedPowers => {
            for kind in [Kind::E, Kind::F] {
                for j1 in 1..=2 {
                    for j2 in 1..=2 {
                        c.push(check_dot_relation(&DotRelation::DividedPowers { kind, i: 1, j1, j2 }, &weight2(k, l), ctx));
                    }
                }
            }
        }
        Rel::SerreWeb => serre(&mut c, k, l, m),
        Rel::DigonThin => {
            for o in ORIENTS {
                let v = frac(qint(k as i64 + 1));
                c.eq_scaled("(k,1)", &seq(&[thick_split(k, 1, o), thick_merge(k, 1, o)]), &v, &id(&[Strand::new(k + 1, o)]));
                c.eq_scaled("(1,k)", &seq(&[thick_split(1, k, o), thick_merge(1, k, o)]), &v, &id(&[Strand::new(k + 1, o)]));
            }
        }
        Rel::DigonThick | Rel::IntDigon => {
            for o in ORIENTS {
                let v = frac(qbinom((k + l) as i64, l as u32));
                c.eq_scaled("", &seq(&[thick_split(k, l, o), thick_merge(k, l, o)]), &v, &id(&[Strand::new(k + l, o)]));
            }
            if rid.rel == Rel::IntDigon {
                audit_thick_gens(&mut c, &[(k, l)]);
            }
        }
        Rel::R2R3Thin => {
            for s in SENSES {
                for d in [CrossDir::Up, CrossDir::Down] {
                    let o = if d == CrossDir::Up { Orient::Up } else { Orient::Down };
                    let x = g(Gen::Cross(d, s));
                    let y = g(Gen::Cross(d, s.flip()));
                    c.eq("R2", &seq(&[y, x.clone()]), &id(&[Strand::new(1, o); 2]));
                    let i1 = id(&[Strand::new(1, o)]);
                    let lhs = seq(&[x.tensor(&i1), i1.tensor(&x), x.tensor(&i1)]);
                    let rhs = seq(&[i1.tensor(&x), x.tensor(&i1), i1.tensor(&x)]);
                    c.eq("R3", &lhs, &rhs);
                }
            }
        }
        Rel::R2R3Thick => {
            for s in SENSES {
                c.eq(
                    "R2",
                    &seq(&[thick_cross_up(k, l, s.flip()), thick_cross_up(l, k, s)]),
                    &id(&[up(k), up(l)]),
                );
                let x = |a, b| thick_cross_up(a, b, s);
                let lhs = seq(&[x(k, l).tensor(&id(&[up(m)])), id(&[up(l)]).tensor(&x(k, m)), x(l, m).tensor(&id(&[up(k)]))]);
                let rhs = seq(&[id(&[up(k)]).tensor(&x(l, m)), x(k, m).tensor(&id(&[up(l)])), id(&[up(m)]).tensor(&x(k, l))]);
                c.eq("R3", &lhs, &rhs);
            }
        }
        Rel::InvLeftward => {
            for s in SENSES {
                let left = g(Gen::Cross(CrossDir::Left, s));
                let right = rotated_right(s.flip());
                c.eq("left.right", &seq(&[right.clone(), left.clone()]), &id(&[up(1), down(1)]));
                c.eq("right.left", &seq(&[left, right]), &id(&[down(1), up(1)]));
                c.eq("left is a rotation", &g(Gen::Cross(CrossDir::Left, s)), &rotated_left(s));
                c.eq("right is a rotation", &g(Gen::Cross(CrossDir::Right, s)), &rotated_right(s));
            }
        }
        Rel::LeftRightInverse => {
            for s in SENSES {
                let a = thick_cross(down(k), up(l), s.flip());
                let b = thick_cross(up(l), down(k), s);
                c.eq("", &seq(&[a.clone(), b.clone()]), &id(&[down(k), up(l)]));
                c.eq("reverse", &seq(&[b, a]), &id(&[up(l), down(k)]));
            }
        }
        Rel::ZigzagThin => {
            zigzags_left(&mut c, 1);
            zigzags_right(&mut c, 1);
        }
        Rel::ZigzagThick => zigzags_left(&mut c, k),
        Rel::ZigzagOther => zigzags_right(&mut c, k),
        Rel::Slides => {
            for (what, w) in [("merge", thick_merge(k, 1, Orient::Up)), ("split", thick_split(k, 1, Orient::Up))] {
                mates(&mut c, what, &w, &rotated(k, 1, what == "merge"));
            }
        }
        Rel::SlidesThick => {
            for (what, w) in [("merge", thick_merge(k, l, Orient::Up)), ("split", thick_split(k, l, Orient::Up))] {
                mates(&mut c, what, &w, &rotated(k, l, what == "merge"));
            }
        }
        Rel::DownMergeDef => {
            c.eq("merge", &thick_merge(k, l, Orient::Down), &dual(&thick_split(l, k, Orient::Up)));
            c.eq("split", &thick_split(k, l, Orient::Down), &dual(&thick_merge(l, k, Orient::Up)));
        }
        Rel::Circle1 => c.scalar("ccw", &seq(&[g(Gen::CupL), g(Gen::CapR)]), &frac(qint(n as i64))),
        Rel::Circle1Rev => c.scalar("cw", &seq(&[g(Gen::CupR), g(Gen::CapL)]), &frac(qint(n as i64))),
        Rel::CircleK => {
            let v = frac(qbinom((n + k - 1) as i64, k as u32));
            c.scalar("ccw", &seq(&[cup_l(k), cap_r(k)]), &v);
            c.scalar("cw", &seq(&[cup_r(k), cap_l(k)]), &v);
        }
        Rel::DumbbellSide => sideways(&mut c, 1, 1),
        Rel::DumbbellKl => sideways(&mut c, k, l),
        Rel::R1Thin => {
            for s in SENSES {
                let v = twist(n, 1, s);
                let (u, d) = (up(1), down(1));
                let x = g(Gen::Cross(CrossDir::Up, s));
                let xd = g(Gen::Cross(CrossDir::Down, s));
                let right = seq(&[id(&[u]).tensor(&g(Gen::CupL)), x.tensor(&id(&[d])), id(&[u]).tensor(&g(Gen::CapR))]);
                let left = seq(&[g(Gen::CupR).tensor(&id(&[u])), id(&[d]).tensor(&x), g(Gen::CapL).tensor(&id(&[u]))]);
                let right_d = seq(&[id(&[d]).tensor(&g(Gen::CupR)), xd.tensor(&id(&[u])), id(&[d]).tensor(&g(Gen::CapL))]);
                let left_d = seq(&[g(Gen::CupL).tensor(&id(&[d])), id(&[u]).tensor(&xd), g(Gen::CapR).tensor(&id(&[d]))]);
                c.eq_scaled("right curl", &right, &v, &id(&[u]));
                c.eq_scaled("left curl", &left, &v, &id(&[u]));
                c.eq_scaled("downward right curl", &right_d, &v, &id(&[d]));
                c.eq_scaled("downward left curl", &left_d, &v, &id(&[d]));
            }
        }
        Rel::R1Thick => {
            for s in SENSES {
                let v = twist(n, k, s);
                let (u, d) = (up(k), down(k));
                let x = thick_cross_up(k, k, s);
                let right = seq(&[id(&[u]).tensor(&cup_l(k)), x.tensor(&id(&[d])), id(&[u]).tensor(&cap_r(k))]);
                let left = seq(&[cup_r(k).tensor(&id(&[u])), id(&[d]).tensor(&x), cap_l(k).tensor(&id(&[u]))]);
                c.eq_scaled("right curl", &right, &v, &id(&[u]));
                c.eq_scaled("left curl", &left, &v, &id(&[u]));
            }
        }
        Rel::Pitchfork => {
            for o in ORIENTS {
                for s in SENSES {
                    pitchforks(&mut c, k, l, m, o, s);
                }
            }
        }
        Rel::DumbbellSlide => {
            for s in SENSES {
                let db = dumbbell(l, m);
                let ik = id(&[up(k)]);
                let x = |a, b| thick_cross_up(a, b, s);
                // k passes the pair (l, m) from the left, then from the right
                let pass = seq(&[x(k, l).tensor(&id(&[up(m)])), id(&[up(l)]).tensor(&x(k, m))]);
                c.eq("right", &seq(&[ik.tensor(&db), pass.clone()]), &seq(&[pass, db.tensor(&ik)]));
                let back = seq(&[id(&[up(l)]).tensor(&x(m, k)), x(l, k).tensor(&id(&[up(m)]))]);
                c.eq("left", &seq(&[db.tensor(&ik), back.clone()]), &seq(&[back, ik.tensor(&db)]));
            }
        }
        Rel::SplitCross => {
            for s in SENSES {
                let v = split_cross_scalar(n, k, l, s);
                let sp = seq(&[thick_split(l, k, Orient::Up), thick_cross_up(l, k, s)]);
                c.eq_scaled("split", &sp, &v, &thick_split(k, l, Orient::Up));
                let mg = seq(&[thick_cross_up(k, l, s), thick_merge(l, k, Orient::Up)]);
                c.eq_scaled("merge", &mg, &v, &thick_merge(k, l, Orient::Up));
            }
        }
        Rel::JwRecursion => {
            let (lhs, rhs) = jw_sides(k);
            c.eq("", &lhs, &rhs);
        }
        Rel::IntDumcross => {
            for s in SENSES {
                let (lhs, rhs) = dumcross_sides(n, k, l, m, s, thick_cross_up);
                c.eq(sense_name(s), &lhs, &rhs);
            }
            audit_thick_gens(&mut c, &[(k, l)]);
            if k + l >= m {
                audit_thick_gens(&mut c, &[(m, k + l - m)]);
            }
        }
        Rel::CrossRedundant => {
            for s in SENSES {
                c.eq(sense_name(s), &thick_cross_up(k, l, s), &ladder_cross(n, k, l, s));
                c.integral(sense_name(s), &ladder_cross(n, k, l, s));
            }
        }
        Rel::SqswitchImpliesDumcross => {
            for s in SENSES {
                let (lhs, rhs) = dumcross_sides(n, k, l, m, s, |a, b, s| ladder_cross(n, a, b, s));
                c.eq(sense_name(s), &lhs, &rhs);
                c.integral(sense_name(s), &rhs);
            }
            for v in 0..=k.min(l) {
                c.push(Report::scalars(
                    "sqswitch-implies-dumcross",
                    format!("coefficient v={} r={}", v, m),
                    &collapse_coefficient(v, m),
                    &LaurentPoly::from(if v == 0 { 1 } else { 0 }),
                ));
            }
        }
    }
    c.done()
}

fn sense_name(s: Sense) -> &'static str {
    match s {
        Sense::Over => "over",
        Sense::Under => "under",
    }
}

fn weight2(k: usize, l: usize) -> GlmWeight {
    GlmWeight::new(&[k as i64, l as i64])
}

fn assoc(c: &mut Ck, a: usize, b: usize, d: usize) {
    for o in ORIENTS {
        let s = |x: usize| id(&[Strand::new(x, o)]);
        let lhs = seq(&[thick_merge(a, b, o).tensor(&s(d)), thick_merge(a + b, d, o)]);
        let rhs = seq(&[s(a).tensor(&thick_merge(b, d, o)), thick_merge(a, b + d, o)]);
        c.eq("assoc", &lhs, &rhs);
        let lhs = seq(&[thick_split(a + b, d, o), thick_split(a, b, o).tensor(&s(d))]);
        let rhs = seq(&[thick_split(a, b + d, o), s(a).tensor(&thick_split(b, d, o))]);
        c.eq("coassoc", &lhs, &rhs);
    }
}

/// Integral images of the thick merges and splits with the given labels.
fn audit_thick_gens(c: &mut Ck, pairs: &[(usize, usize)]) {
    for &(a, b) in pairs {
        c.integral(&format!("merge({},{})", a, b), &thick_merge(a, b, Orient::Up));
        c.integral(&format!("split({},{})", a, b), &thick_split(a, b, Orient::Up));
    }
}

fn serre(c: &mut Ck, k: usize, l: usize, m: usize) {
    let base = GlmWeight::new(&[k as i64, l as i64, m as i64]);
    let two = LaurentFraction::from(qint(2));
    for kind in [Kind::F, Kind::E] {
        let x = |i| Letter { kind, i, power: 1 };
        for (a, b) in [(1, 2), (2, 1)] {
            let words = [vec![x(a), x(a), x(b)], vec![x(a), x(b), x(a)], vec![x(b), x(a), x(a)]];
            let target = DotWord::new(base.clone(), words[0].clone()).target();
            if !target.is_nonnegative() {
                continue;
            }
            let w: Vec<WebExpr> = words.iter().map(|ls| a_mn(&DotWord::new(base.clone(), ls.clone()))).collect();
            let (dom, cod) = (base.object().expect("nonnegative"), target.object().expect("nonnegative"));
            let fit = |e: &WebExpr| if e.is_zero() { WebExpr::zero(dom.clone(), cod.clone()) } else { e.clone() };
            let sum = fit(&w[0]).sub(&fit(&w[1]).scale(&two)).and_then(|s| s.add(&fit(&w[2]))).expect("same boundary");
            let kd = if kind == Kind::F { "F" } else { "E" };
            c.zero(&format!("{}{} {}{} {}{}", kd, a, kd, a, kd, b), &sum);
        }
        // the divided-power form as well
        for (a, b) in [(1, 2), (2, 1)] {
            let r = check_dot_relation(&DotRelation::Serre { kind, a, b }, &base, c.ctx);
            c.push(r);
        }
    }
}

/// Left crossing `v^ -> ^v` as a rotated upward crossing.
fn rotated_left(s: Sense) -> WebExpr {
    let (u, d) = (up(1), down(1));
    seq(&[id(&[d, u]).tensor(&g(Gen::CupL)), id(&[d]).tensor(&g(Gen::Cross(CrossDir::Up, s))).tensor(&id(&[d])), g(Gen::CapL).tensor(&id(&[u, d]))])
}

/// Right crossing `^v -> v^` as a rotated upward crossing.
fn rotated_right(s: Sense) -> WebExpr {
    let (u, d) = (up(1), down(1));
    seq(&[g(Gen::CupR).tensor(&id(&[u, d])), id(&[d]).tensor(&g(Gen::Cross(CrossDir::Up, s))).tensor(&id(&[d])), id(&[d, u]).tensor(&g(Gen::CapR))])
}

fn zigzags_left(c: &mut Ck, k: usize) {
    let (u, d) = (id(&[up(k)]), id(&[down(k)]));
    c.eq("up", &seq(&[cup_l(k).tensor(&u), u.tensor(&cap_l(k))]), &u);
    c.eq("down", &seq(&[d.tensor(&cup_l(k)), cap_l(k).tensor(&d)]), &d);
}

fn zigzags_right(c: &mut Ck, k: usize) {
    let (u, d) = (id(&[up(k)]), id(&[down(k)]));
    c.eq("down", &seq(&[cup_r(k).tensor(&d), d.tensor(&cap_r(k))]), &d);
    c.eq("up", &seq(&[u.tensor(&cup_r(k)), cap_r(k).tensor(&u)]), &u);
}

/// The half-turn rotation of an upward `(k,l)` merge or split, drawn with
/// downward splits and merges.
fn rotated(k: usize, l: usize, merge: bool) -> WebExpr {
    if merge {
        thick_split(l, k, Orient::Down)
    } else {
        thick_merge(l, k, Orient::Down)
    }
}

/// `w` slides around caps and cups, becoming `wd` on the other side.
fn mates(c: &mut Ck, what: &str, w: &WebExpr, wd: &WebExpr) {
    let (a, b) = (w.dom().clone(), w.cod().clone());
    let (ia, ib) = (WebExpr::id(&a), WebExpr::id(&b));
    let (iad, ibd) = (WebExpr::id(&a.dual()), WebExpr::id(&b.dual()));
    c.eq(&format!("{} cap right", what), &seq(&[w.tensor(&ibd), ev_r(&b)]), &seq(&[ia.tensor(wd), ev_r(&a)]));
    c.eq(&format!("{} cap left", what), &seq(&[ibd.tensor(w), ev(&b)]), &seq(&[wd.tensor(&ia), ev(&a)]));
    c.eq(&format!("{} cup left", what), &seq(&[coev(&a), w.tensor(&iad)]), &seq(&[coev(&b), ib.tensor(wd)]));
    c.eq(&format!("{} cup right", what), &seq(&[coev_r(&a), iad.tensor(w)]), &seq(&[coev_r(&b), wd.tensor(&ib)]));
}

/// Closing the right `l` strand of the `(k,l)` dumbbell, and its mirror.
fn sideways(c: &mut Ck, k: usize, l: usize) {
    let n = c.ctx.n;
    let v = frac(qbinom((n + k + l - 1) as i64, l as u32));
    let (uk, dl) = (id(&[up(k)]), id(&[down(l)]));
    let right = seq(&[uk.tensor(&cup_l(l)), dumbbell(k, l).tensor(&dl), uk.tensor(&cap_r(l))]);
    c.eq_scaled("right", &right, &v, &uk);
    let left = seq(&[cup_r(l).tensor(&uk), dl.tensor(&dumbbell(l, k)), cap_l(l).tensor(&uk)]);
    c.eq_scaled("left", &left, &v, &uk);
    // the same closures on downward strands
    let dk = id(&[down(k)]);
    let right_d = seq(&[dk.tensor(&cup_r(l)), dual(&dumbbell(l, k)).tensor(&id(&[up(l)])), dk.tensor(&cap_l(l))]);
    let left_d = seq(&[cup_l(l).tensor(&dk), id(&[up(l)]).tensor(&dual(&dumbbell(k, l))), cap_r(l).tensor(&dk)]);
    c.eq_scaled("downward right", &right_d, &v, &dk);
    c.eq_scaled("downward left", &left_d, &v, &dk);
}

/// `q^{+-k(k - k/n + n - 1)}`, the thick curl scalar.
pub fn twist(n: usize, k: usize, s: Sense) -> LaurentFraction {
    let (n, k) = (n as i64, k as i64);
    let e = k * k * n - k * k + n * n * k - n * k;
    qf(if s == Sense::Over { e } else { -e }, n as u32)
}

/// The crossing absorbed into a split (or merge): `q^{kl - kl/n}` for the
/// positive crossing and its inverse for the negative one.
pub fn split_cross_scalar(n: usize, k: usize, l: usize, s: Sense) -> LaurentFraction {
    let (n, kl) = (n as i64, (k * l) as i64);
    let e = kl * n - kl;
    qf(if s == Sense::Over { e } else { -e }, n as u32)
}

fn pitchforks(c: &mut Ck, a: usize, b1: usize, b2: usize, o: Orient, s: Sense) {
    let st = |x: usize| Strand::new(x, o);
    let i = |x: usize| id(&[st(x)]);
    let x = |p: usize, q: usize| thick_cross(st(p), st(q), s);
    let tag = |w: &str| format!("{} {:?} {:?}", w, o, s);
    // a passes a merged pair
    let lhs = seq(&[i(a).tensor(&thick_merge(b1, b2, o)), x(a, b1 + b2)]);
    let rhs = seq(&[x(a, b1).tensor(&i(b2)), i(b1).tensor(&x(a, b2)), thick_merge(b1, b2, o).tensor(&i(a))]);
    c.eq(&tag("merge right"), &lhs, &rhs);
    let lhs = seq(&[x(a, b1 + b2), thick_split(b1, b2, o).tensor(&i(a))]);
    let rhs = seq(&[i(a).tensor(&thick_split(b1, b2, o)), x(a, b1).tensor(&i(b2)), i(b1).tensor(&x(a, b2))]);
    c.eq(&tag("split right"), &lhs, &rhs);
    // a merged pair passes b
    let (a1, a2, b) = (a, b1, b2);
    let lhs = seq(&[thick_merge(a1, a2, o).tensor(&i(b)), x(a1 + a2, b)]);
    let rhs = seq(&[i(a1).tensor(&x(a2, b)), x(a1, b).tensor(&i(a2)), i(b).tensor(&thick_merge(a1, a2, o))]);
    c.eq(&tag("merge left"), &lhs, &rhs);
    let lhs = seq(&[x(a1 + a2, b), i(b).tensor(&thick_split(a1, a2, o))]);
    let rhs = seq(&[thick_split(a1, a2, o).tensor(&i(b)), i(a1).tensor(&x(a2, b)), x(a1, b).tensor(&i(a2))]);
    c.eq(&tag("split left"), &lhs, &rhs);
}

/// Both sides of the projector recursion for `e_k`, `k >= 2`.
pub fn jw_sides(k: usize) -> (WebExpr, WebExpr) {
    let lhs = projector(k);
    let e = projector(k - 1).tensor(&id(&[up(1)]));
    let sm = id(&vec![up(1); k - 2]).tensor(&dumbbell_thin());
    let qk = frac(qint(k as i64)).inv().expect("[k] is nonzero");
    let a = -(frac(qint(k as i64 - 2)) * qk.clone());
    let b = frac(qint(k as i64 - 1)) * qk;
    let rhs = e.scale(&a).add(&seq(&[e.clone(), sm, e]).scale(&b)).expect("same boundary");
    (lhs, rhs)
}

/// Dumbbell `(k,l) -> (r, k+l-r)` and its expansion through crossings of
/// the middle edges, with `cross` supplying the crossing.
fn dumcross_sides(n: usize, k: usize, l: usize, r: usize, s: Sense, cross: impl Fn(usize, usize, Sense) -> WebExpr) -> (WebExpr, WebExpr) {
    let t = (k + l).saturating_sub(r);
    let lhs = seq(&[thick_merge(k, l, Orient::Up), thick_split(r.min(k + l), t, Orient::Up)]);
    let mut rhs = WebExpr::zero(lhs.dom().clone(), lhs.cod().clone());
    for i in 0..=k {
        if i + r < k || i + r - k > l {
            continue;
        }
        let j = i + r - k;
        let bottom = thick_split(k - i, i, Orient::Up).tensor(&thick_split(j, l - j, Orient::Up));
        let mid = tensor_all(&[id(&[up(k - i)]), cross(i, j, s), id(&[up(l - j)])]);
        let top = thick_merge(k - i, j, Orient::Up).tensor(&thick_merge(i, l - j, Orient::Up));
        let e = ((i * j) as i64) - (((k - i) * (l - j) * n) as i64);
        let coeff = qf(if s == Sense::Over { e } else { -e }, n as u32);
        rhs = rhs.add(&seq(&[bottom, mid, top]).scale(&coeff)).expect("same boundary");
    }
    (lhs, rhs)
}

/// The crossing written with ladders only: `q^{-kl/n} sum (-q)^{-t}
/// F^(k-t) E^(l-t)` for the positive crossing, the bar image for the
/// negative one.
pub fn ladder_cross(n: usize, k: usize, l: usize, s: Sense) -> WebExpr {
    let sign = if s == Sense::Over { 1 } else { -1 };
    let mut acc = WebExpr::zero(WebObject::up(&[k, l]), WebObject::up(&[l, k]));
    for t in 0..=k.min(l) {
        let rung = seq(&[ladder_e(l - t, k, l), ladder_f(k - t, k + l - t, t)]);
        let tt = t as i64;
        let c = qf(-sign * (k * l) as i64, n as u32) * LaurentFraction::from(LaurentPoly::q_pow(-sign * tt)) * LaurentFraction::from_int(if t % 2 == 0 { 1 } else { -1 });
        acc = acc.add(&rung.scale(&c)).expect("same boundary");
    }
    acc
}

/// `sum_{s <= u <= v} (-1)^{s+u} q^{-s(s+r)+s-u} [u,s] [u+r, v-s] [v,u]`,
/// which collapses to `delta_{v,0}`.
pub fn collapse_coefficient(v: usize, r: usize) -> LaurentPoly {
    let mut acc = LaurentPoly::from(0);
    for s in 0..=v {
        for u in s..=v {
            let (si, ui, ri) = (s as i64, u as i64, r as i64);
            let sign = if (s + u) % 2 == 0 { 1 } else { -1 };
            let term = LaurentPoly::q_pow(-si * (si + ri) + si - ui)
                * qbinom(ui, s as u32)
                * qbinom(ui + ri, (v - s) as u32)
                * qbinom(v as i64, u as u32);
            acc = if sign > 0 { acc + term } else { acc - term };
        }
    }
    acc
}

/// The trinomial form of one summand, `[v,s] [u+r; u-s, v-u] = [u,s] [u+r, v-s] [v,u]`.
pub fn trinomial_identity(v: usize, s: usize, u: usize, r: usize) -> bool {
    let lhs = qbinom(v as i64, s as u32) * qtrinom((u + r) as i64, (u - s) as u32, (v - u) as u32);
    let rhs = qbinom(u as i64, s as u32) * qbinom((u + r) as i64, (v - s) as u32) * qbinom(v as i64, u as u32);
    lhs == rhs
}

/// The desk-scale parameter tuples checked by the suite: labels up to
/// `max`, or `max - 1` when three strands multiply dimensions.
pub fn instances(rel: Rel, max: usize) -> Vec<RelationId> {
    let thin = max.saturating_sub(1).max(1);
    let r = |a: core::ops::RangeInclusive<usize>| a.collect::<Vec<_>>();
    let tuples: Vec<Vec<usize>> = match rel {
        Rel::JwRecursion => r(2..=4).into_iter().map(|k| vec![k]).collect(),
        Rel::IntDumcross | Rel::SqswitchImpliesDumcross => {
            let mut v = Vec::new();
            for k in 1..=2 {
                for l in 1..=2 {
                    for t in 0..=k + l {
                        v.push(vec![k, l, t]);
                    }
                }
            }
            v
        }
        Rel::SquareSwitchThin | Rel::SquareSwitchThick | Rel::DividedPowers | Rel::IntSqswitch => {
            let top = if rel == Rel::SquareSwitchThin { max } else { thin + 1 };
            let mut v = Vec::new();
            for k in 0..=top {
                for l in 0..=top {
                    v.push(vec![k, l]);
                }
            }
            v
        }
        Rel::SerreWeb => {
            let mut v = Vec::new();
            for k in 0..=thin {
                for l in 0..=thin {
                    for m in 0..=thin {
                        v.push(vec![k, l, m]);
                    }
                }
            }
            v
        }
        _ => {
            let bound = match rel.keys().len() {
                // caps, cups and rotations of thick edges explode into many thin strands
                _ if matches!(rel, Rel::DumbbellKl | Rel::SlidesThick | Rel::DownMergeDef | Rel::R1Thick) => thin,
                3 => thin,
                _ if rel.is_integral() => 2,
                _ => max,
            };
            let mut v: Vec<Vec<usize>> = vec![Vec::new()];
            for _ in rel.keys() {
                v = v.into_iter().flat_map(|t| (1..=bound).map(move |x| [t.clone(), vec![x]].concat())).collect();
            }
            v
        }
    };
    tuples.into_iter().map(|t| RelationId::new(rel, &t)).collect()
}
