//! Local dumbbells, thin expressions, the red/green colour change, and rank
//! checks for small spanning sets.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use num_rational::BigRational;

use crate::functor::GammaContext;
use crate::glnmod::{commutant_dim, sym_dim};
use crate::linalg::rank;
use crate::qalg::{qfact, qint, LaurentFraction};
use crate::verify::Report;
use crate::webcat::build::*;
use crate::webcat::{compose_all, tensor_all, Diagram, Flavor, Gen, Orient, Strand, WebExpr, WebObject};
use crate::Error;

/// A tensor product of `k`-dumbbells (`split_tree(k) . merge_tree(k)`) on
/// thin upward strands; blocks of size 1 are identities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalDumbbell {
    pub blocks: Vec<usize>,
    pub coeff: LaurentFraction,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Tag {
    Below,
    Merging(usize),
    Splitting,
    Above,
}

impl LocalDumbbell {
    pub fn new(blocks: &[usize]) -> Self {
        LocalDumbbell { blocks: blocks.to_vec(), coeff: LaurentFraction::from_int(1) }
    }

    /// Recognizes a single-term web as a local dumbbell.
    pub fn from_expr(w: &WebExpr) -> Result<Self, Error> {
        let bad = |m: &str| Error::NotLocalDumbbell(m.into());
        let mut terms = w.terms();
        let (d, c) = match (terms.next(), terms.next()) {
            (Some(t), None) => t,
            (None, _) => return Err(bad("zero web")),
            _ => return Err(bad("more than one term")),
        };
        if d.dom().strands().iter().any(|s| *s != Strand::up(1)) {
            return Err(bad("boundary must be thin and upward"));
        }
        // every strand remembers the bottom strands it came from
        let mut word: Vec<(Tag, usize)> = (0..d.dom().len()).map(|_| (Tag::Below, 1)).collect();
        for layer in d.layers() {
            let mut next = Vec::new();
            let mut p = 0;
            for g in layer {
                match *g {
                    Gen::Id(_) => next.push(word[p]),
                    Gen::MergeUp(k) => {
                        let (a, b) = (word[p], word[p + 1]);
                        let ok_left = matches!(a.0, Tag::Below) && k == 1 || matches!(a.0, Tag::Merging(_));
                        if !ok_left || b.0 != Tag::Below {
                            return Err(bad("merge after a split"));
                        }
                        next.push((Tag::Merging(a.1 + 1), a.1 + 1));
                    }
                    Gen::SplitUp(k) => {
                        let a = word[p];
                        if !matches!(a.0, Tag::Merging(_) | Tag::Splitting) {
                            return Err(bad("split of an unmerged strand"));
                        }
                        next.push((if k == 1 { Tag::Above } else { Tag::Splitting }, a.1));
                        next.push((Tag::Above, a.1));
                    }
                    _ => return Err(bad("only thin upward merges and splits are allowed")),
                }
                p += g.dom().len();
            }
            word = next;
        }
        if word.iter().any(|(t, _)| matches!(t, Tag::Merging(_) | Tag::Splitting)) {
            return Err(bad("a thick edge reaches the top"));
        }
        // read the blocks off the top: a run of `k` strands split from one edge
        let mut blocks = Vec::new();
        let mut i = 0;
        while i < word.len() {
            let (t, k) = word[i];
            let k = if t == Tag::Below { 1 } else { k };
            blocks.push(k);
            i += k;
        }
        Ok(LocalDumbbell { blocks, coeff: c.clone() })
    }

    pub fn web(&self) -> WebExpr {
        let parts: Vec<WebExpr> = self.blocks.iter().map(|&k| block(k)).collect();
        tensor_all(&parts).scale(&self.coeff)
    }

    /// 2-dumbbells in the biggest term of the thin expression.
    pub fn two_dumbbell_count(&self) -> usize {
        self.blocks.iter().map(|&k| (1usize << k.saturating_sub(1)) - 1).sum()
    }
}

fn block(k: usize) -> WebExpr {
    split_tree(k, Orient::Up).compose(&merge_tree(k, Orient::Up)).expect("trees agree")
}

fn ids(k: usize) -> WebExpr {
    WebExpr::id(&WebObject::up(&vec![1; k]))
}

/// `e_k` written in thin 2-dumbbells through the Jones--Wenzl style
/// recursion `e_k = -[k-2]/[k] (e_{k-1} * 1) + [k-1]/[k] (e_{k-1} * 1)(1 * D)(e_{k-1} * 1)`.
pub fn projector_thin(k: usize) -> WebExpr {
    if k <= 1 {
        return ids(k);
    }
    let prev = projector_thin(k - 1).tensor(&ids(1));
    let mid = ids(k - 2).tensor(&dumbbell_thin());
    let kk = LaurentFraction::from(qint(k as i64));
    let a = LaurentFraction::from(qint(k as i64 - 2)) / kk.clone();
    let b = LaurentFraction::from(qint(k as i64 - 1)) / kk;
    let long = compose_all(&[prev.clone(), mid, prev.clone()]).expect("boundaries agree");
    long.scale(&b).sub(&prev.scale(&a)).expect("boundaries agree")
}

/// The expansion of a local dumbbell into thin 2-dumbbells and identities.
pub fn thin_expression(w: &WebExpr) -> Result<WebExpr, Error> {
    let ld = LocalDumbbell::from_expr(w)?;
    let parts: Vec<WebExpr> = ld
        .blocks
        .iter()
        .map(|&k| projector_thin(k).scale(&LaurentFraction::from(qfact(k as u32))))
        .collect();
    Ok(tensor_all(&parts).scale(&ld.coeff))
}

/// Number of 2-dumbbells in the biggest term of [`thin_expression`].
pub fn two_dumbbell_count(w: &WebExpr) -> Result<usize, Error> {
    Ok(LocalDumbbell::from_expr(w)?.two_dumbbell_count())
}

/// Number of thin 2-dumbbells in each term of `w`.
pub fn dumbbells_per_term(w: &WebExpr) -> Vec<usize> {
    w.terms().map(|(d, _)| sites(d).len()).collect()
}

#[derive(Clone, Debug)]
enum Site {
    Green(usize, usize),
    /// merge, the identity segments of the 2-edge, split
    Red((usize, usize), Vec<(usize, usize)>, (usize, usize)),
}

/// The index of the generator covering position `pos` of the layer's
/// domain, and the offset of its codomain.
fn locate(layer: &[Gen], pos: usize) -> Option<(usize, usize, usize)> {
    let (mut p, mut q) = (0, 0);
    for (i, g) in layer.iter().enumerate() {
        let (a, b) = g.arity();
        if pos < p + a {
            return Some((i, pos - p, q));
        }
        p += a;
        q += b;
    }
    None
}

fn sites(d: &Diagram) -> Vec<Site> {
    let layers = d.layers();
    let mut out = Vec::new();
    for (li, layer) in layers.iter().enumerate() {
        let mut q = 0;
        for (gi, g) in layer.iter().enumerate() {
            match g {
                Gen::GreenDumbbell => out.push(Site::Green(li, gi)),
                Gen::MergeUp(1) => {
                    let mut pos = q;
                    let mut path = Vec::new();
                    for (lj, up) in layers.iter().enumerate().skip(li + 1) {
                        let Some((hj, _, off)) = locate(up, pos) else { break };
                        match up[hj] {
                            Gen::Id(_) => {
                                path.push((lj, hj));
                                pos = off;
                            }
                            Gen::SplitUp(1) => {
                                out.push(Site::Red((li, gi), path, (lj, hj)));
                                break;
                            }
                            _ => break,
                        }
                    }
                }
                _ => {}
            }
            q += g.arity().1;
        }
    }
    out
}

/// Rewrites every thin 2-dumbbell with `red = -green + [2] id` (and back),
/// flipping the flavor.
pub fn color_change(w: &WebExpr) -> WebExpr {
    let flavor = match w.flavor {
        Flavor::Symmetric => Flavor::Exterior,
        Flavor::Exterior => Flavor::Symmetric,
    };
    let mut out = WebExpr::zero(w.dom().clone(), w.cod().clone()).with_flavor(flavor);
    let two = LaurentFraction::from(qint(2));
    let up1 = Gen::Id(Strand::up(1));
    for (d, c) in w.terms() {
        let ss = sites(d);
        for mask in 0u64..(1u64 << ss.len()) {
            // bit set: swap colour (coefficient -1); clear: identity ([2])
            let mut coeff = c.clone();
            let mut repl: BTreeMap<(usize, usize), Vec<Gen>> = BTreeMap::new();
            let mut grow: BTreeSet<(usize, usize)> = BTreeSet::new();
            for (i, s) in ss.iter().enumerate() {
                let swap = mask >> i & 1 == 1;
                coeff = if swap { -coeff } else { coeff * two.clone() };
                match s {
                    Site::Green(l, g) => {
                        if swap {
                            repl.insert((*l, *g), vec![Gen::MergeUp(1)]);
                            grow.insert((*l, *g));
                        } else {
                            repl.insert((*l, *g), vec![up1, up1]);
                        }
                    }
                    Site::Red(m, path, s) => {
                        repl.insert(*m, if swap { vec![Gen::GreenDumbbell] } else { vec![up1, up1] });
                        for p in path {
                            repl.insert(*p, vec![up1, up1]);
                        }
                        repl.insert(*s, vec![up1, up1]);
                    }
                }
            }
            let mut layers = Vec::new();
            for (li, layer) in d.layers().iter().enumerate() {
                let mut new = Vec::new();
                let mut extra = Vec::new();
                let mut any = false;
                for (gi, g) in layer.iter().enumerate() {
                    match repl.get(&(li, gi)) {
                        Some(r) => new.extend(r.iter().copied()),
                        None => new.push(*g),
                    }
                    if grow.contains(&(li, gi)) {
                        extra.push(Gen::SplitUp(1));
                        any = true;
                    } else {
                        let r = repl.get(&(li, gi)).cloned().unwrap_or_else(|| vec![*g]);
                        extra.extend(r.iter().flat_map(|x| x.cod()).map(Gen::Id));
                    }
                }
                layers.push(new);
                if any {
                    layers.push(extra);
                }
            }
            let nd = Diagram::from_layers(d.dom().clone(), layers).expect("colour change keeps boundaries");
            out = out.add(&WebExpr::term(coeff, nd).with_flavor(flavor)).expect("boundaries agree");
        }
    }
    out
}

/// Rank of the specialized images of `ws` (at `u = q^(1/n) = u0`),
/// each flattened to one vector.
pub fn rank_of_span(ws: &[WebExpr], n: usize, u0: &BigRational) -> Result<usize, Error> {
    let Some(first) = ws.first() else { return Ok(0) };
    let ctx = GammaContext::new(n);
    let mut rows = Vec::new();
    for w in ws {
        if w.dom() != first.dom() || w.cod() != first.cod() {
            return Err(Error::BoundaryMismatch {
                layer: None,
                expected: format!("{} -> {}", first.dom(), first.cod()),
                found: format!("{} -> {}", w.dom(), w.cod()),
            });
        }
        let m = ctx.expr(w)?.specialize(n as u32, u0)?;
        let mut row = vec![BigRational::from_integer(0.into()); m.rows() * m.cols()];
        for (r, c, v) in m.entries() {
            row[r * m.cols() + c] = v.clone();
        }
        rows.push(row);
    }
    Ok(rank(rows))
}

/// Checks that `ws` is linearly independent at every point of `u0s`, and for
/// endomorphisms that it spans the whole commutant.
pub fn independence_report(ws: &[WebExpr], n: usize, u0s: &[BigRational]) -> Report {
    let params = format!("n={} count={}", n, ws.len());
    let mut parts = Vec::new();
    for u0 in u0s {
        let p = format!("{} u0={}", params, u0);
        let r = match rank_of_span(ws, n, u0) {
            Ok(r) => r,
            Err(e) => {
                parts.push(Report::fail("independence", p, e.to_string()));
                continue;
            }
        };
        parts.push(Report::scalars("independence", p.clone(), &r, &ws.len()));
        if let Some(w) = ws.first().filter(|w| w.dom() == w.cod()) {
            let space = GammaContext::new(n).space(w.dom());
            match commutant_dim(&space, n as u32, u0) {
                Ok(d) => parts.push(Report::scalars("commutant", p, &r, &d)),
                Err(e) => parts.push(Report::fail("commutant", p, e.to_string())),
            }
        }
    }
    Report::all("independence", params, parts)
}

/// Small spanning sets of `End((1^)^k)` in thin 2-dumbbells, `k <= 3`.
pub fn thin_span(k: usize) -> Vec<WebExpr> {
    let d = dumbbell_thin();
    match k {
        0 | 1 => vec![ids(k)],
        2 => vec![ids(2), d],
        3 => {
            let a = d.tensor(&ids(1));
            let b = ids(1).tensor(&d);
            vec![
                ids(3),
                a.clone(),
                b.clone(),
                a.compose(&b).expect("boundaries agree"),
                b.compose(&a).expect("boundaries agree"),
            ]
        }
        _ => panic!("thin_span is only tabulated up to three strands"),
    }
}

/// `Gamma(e_k)` is idempotent of rank `C(n+k-1, k)`.
pub fn projector_report(k: usize, n: usize) -> Report {
    let params = format!("n={} k={}", n, k);
    let ctx = GammaContext::new(n);
    let e = match ctx.expr(&projector(k)) {
        Ok(e) => e,
        Err(err) => return Report::fail("projector", params, err.to_string()),
    };
    let idem = Report::matrices("projector", format!("{} idempotent", params), &e.mul(&e), &e);
    let u0 = BigRational::new(3.into(), 2.into());
    let rk = match e.specialize(n as u32, &u0) {
        Ok(m) => Report::scalars("projector", format!("{} rank", params), &rank(m.to_dense()), &sym_dim(n, k)),
        Err(err) => Report::fail("projector", params.clone(), err.to_string()),
    };
    Report::all("projector", params, [idem, rk])
}
