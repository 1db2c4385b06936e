//! Pairings of webs against closures, and the explosion-shape check.

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use crate::functor::GammaContext;
use crate::qalg::{qbinom, qf, qint, LaurentFraction};
use crate::verify::{eval_expr_rewrite, Report};
use crate::webcat::build::*;
use crate::webcat::{compose_all, Gen, Orient, Sense, WebExpr, WebObject};
use crate::Error;

/// Glues `w: A -> B`, bent to `0 -> B * A*`, against `w_close: B * A* -> 0`.
pub fn pair(w: &WebExpr, w_close: &WebExpr, n: usize) -> Result<LaurentFraction, Error> {
    let closed = w_close.compose(&bend(w))?;
    GammaContext::new(n).scalar(&closed)
}

/// [`pair`] with the rewrite evaluator as a second opinion. Inputs the
/// evaluator does not handle (thick labels, green dumbbells, budget) are
/// reported as a gamma-only pass.
pub fn pair_report(w: &WebExpr, w_close: &WebExpr, n: usize) -> Report {
    let params = format!("n={}", n);
    let closed = match w_close.compose(&bend(w)) {
        Ok(c) => c,
        Err(e) => return Report::fail("pair", params, e.to_string()),
    };
    let g = match GammaContext::new(n).scalar(&closed) {
        Ok(v) => v,
        Err(e) => return Report::fail("pair", params, e.to_string()),
    };
    match eval_expr_rewrite(&closed, n) {
        Ok(r) => Report::scalars("pair", params, &g, &r),
        Err(e) => {
            let mut r = Report::scalars("pair", params, &g, &g);
            r.note = format!("rewrite skipped: {}", e);
            r
        }
    }
}

/// The closure used to separate the relations: `w` on `1^ * 1^` is put
/// between a thin split and merge of a 2-strand, and that strand closed
/// with a 2-labelled cup and cap.
pub fn closure(w: &WebExpr) -> Result<WebExpr, Error> {
    let two = WebObject::up(&[1, 1]);
    if *w.dom() != two || *w.cod() != two {
        return Err(Error::BoundaryMismatch { layer: None, expected: two.to_string(), found: format!("{} -> {}", w.dom(), w.cod()) });
    }
    let inner = compose_all(&[WebExpr::gen(Gen::SplitUp(1)), w.clone(), WebExpr::gen(Gen::MergeUp(1))])?;
    let down2 = WebExpr::id(&WebObject::new([crate::webcat::Strand::down(2)]));
    compose_all(&[cup_l(2), inner.tensor(&down2), cap_r(2)])
}

/// The same closure written as a pairing: bend `w`, then merge both pairs
/// and cap the 2-strands off.
pub fn closing_web() -> WebExpr {
    let merges = WebExpr::gen(Gen::MergeUp(1)).tensor(&WebExpr::gen(Gen::MergeDown(1)));
    cap_r(2).compose(&merges).expect("boundaries agree")
}

/// Closure values of the thin dumbbell and the positive thin crossing,
/// against `[2]^2 [n+1 choose 2]` and `q^(1-1/n) [2] [n+1 choose 2]`, and
/// their inequality.
pub fn closures_report(n: usize) -> Report {
    let ctx = GammaContext::new(n);
    let params = format!("n={}", n);
    let b = LaurentFraction::from(qbinom(n as i64 + 1, 2));
    let two = LaurentFraction::from(qint(2));
    let expect_d = two.clone() * two.clone() * b.clone();
    let expect_x = qf(n as i64 - 1, n as u32) * two * b;
    let mut parts = Vec::new();
    let mut vals = Vec::new();
    for (what, w, expect) in [
        ("dumbbell", dumbbell_thin(), expect_d),
        ("crossing", thick_cross_up(1, 1, Sense::Over), expect_x),
    ] {
        let cw = closure(&w).expect("closure boundaries agree");
        match ctx.scalar(&cw) {
            Ok(v) => {
                parts.push(Report::scalars("closure", format!("{} {}", params, what), &v, &expect));
                vals.push(v);
            }
            Err(e) => parts.push(Report::fail("closure", format!("{} {}", params, what), e.to_string())),
        }
        parts.push(pair_report(&w, &closing_web(), n).with_note(what));
        if let Ok(r) = eval_expr_rewrite(&cw, n) {
            parts.push(Report::scalars("closure-rewrite", format!("{} {}", params, what), &r, &expect));
        }
    }
    if vals.len() == 2 && vals[0] == vals[1] {
        parts.push(Report::fail("closure", params.clone(), "the two closures agree"));
    }
    Report::all("closures", params, parts)
}

/// `thick_merge(2,2)` through three explosion shapes: the builder's
/// (right strand exploded, absorbed from the right), both strands exploded
/// into one comb, and the left strand exploded and absorbed through
/// `(1,k)`-merges.
pub fn explosion_shapes(n: usize) -> Report {
    let ctx = GammaContext::new(n);
    let params = format!("n={}", n);
    let up = Orient::Up;
    let a = thick_merge(2, 2, up);
    let b = merge_tree(4, up)
        .compose(&split_tree(2, up).tensor(&split_tree(2, up)))
        .expect("boundaries agree")
        .scale(&(inv_fact(2) * inv_fact(2)));
    let c = compose_all(&[
        WebExpr::gen(Gen::SplitUp(1)).tensor(&WebExpr::id(&WebObject::up(&[2]))),
        WebExpr::id(&WebObject::up(&[1])).tensor(&merge_1k(n, 2)),
        merge_1k(n, 3),
    ])
    .expect("boundaries agree")
    .scale(&inv_fact(2));
    let mut parts = Vec::new();
    for (what, x, y) in [("builder=comb", &a, &b), ("builder=left", &a, &c)] {
        let r = match (ctx.expr(x), ctx.expr(y)) {
            (Ok(p), Ok(q)) => Report::matrices("explosion-shapes", format!("{} {}", params, what), &p, &q),
            (Err(e), _) | (_, Err(e)) => Report::fail("explosion-shapes", params.clone(), e.to_string()),
        };
        parts.push(r);
    }
    Report::all("explosion-shapes", params, parts)
}
