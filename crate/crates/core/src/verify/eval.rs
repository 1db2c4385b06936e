//! Closed-web evaluation by diagrammatic rewriting, independent of the
//! matrices of the functor.
//!
//! Strategy:
//! 1. Read the diagram as a planar graph: thin caps and cups are just wires,
//!    every 2-labelled edge is the rung of a thin dumbbell.
//! 2. Each rung becomes `q^{1/n} X_+ + q^{-1} id` (the thin square switch
//!    solved for the dumbbell), leaving an oriented link diagram.
//! 3. Links are evaluated by skein theory: the first crossing met from
//!    below in a fixed traversal is switched,
//!    `X_+ = q^{-2/n} X_- + q^{-1/n}(q - q^{-1}) X_0`,
//!    until the diagram is descending, i.e. a framed unlink worth
//!    `prod [n] q^{(n - 1/n) w_i}`. Free circles are removed as `[n]`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::qalg::{qf, qint, LaurentFraction, LaurentPoly};
use crate::webcat::{CrossDir, Diagram, Gen, Orient, Sense, WebExpr};
use crate::Error;

/// Step cap of the skein recursion.
pub const DEFAULT_BUDGET: usize = 200_000;

#[derive(Clone, Copy, Debug)]
struct Crossing {
    a: (usize, usize),
    b: (usize, usize),
    a_over: bool,
    positive: bool,
}

#[derive(Clone, Copy, Debug)]
enum Vertex {
    /// Two thin strands flow in (left, right as seen along the flow), the
    /// rung flows out.
    Merge { l: usize, r: usize, out: usize },
    Split { inp: usize, l: usize, r: usize },
}

/// An oriented link diagram: crossings, the wiring from out-ports to
/// in-ports, and the number of crossingless circles.
#[derive(Clone, Debug, Default)]
struct Link {
    crossings: Vec<Crossing>,
    next: BTreeMap<usize, usize>,
    circles: usize,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn fresh(&mut self) -> usize {
        self.0.push(self.0.len());
        self.0.len() - 1
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        self.0[a] = b;
    }
}

/// The planar graph of a closed diagram, before rungs are resolved.
struct Graph {
    crossings: Vec<Crossing>,
    vertices: Vec<Vertex>,
    /// Every wire as its two port ends, plus wires with no ends (circles).
    wires: Vec<(usize, usize)>,
    circles: usize,
    /// Port -> is an in-port.
    is_in: BTreeMap<usize, bool>,
}

fn build_graph(d: &Diagram) -> Result<Graph, Error> {
    if !d.is_closed() {
        return Err(Error::NotClosed);
    }
    let mut uf = UnionFind(Vec::new());
    let mut is_in = BTreeMap::new();
    let mut crossings = Vec::new();
    let mut vertices = Vec::new();
    let mut tokens: Vec<usize> = Vec::new();
    for layer in d.layers() {
        let mut out = Vec::new();
        let mut pos = 0;
        for g in layer {
            let (k_in, _) = g.arity();
            let ins: Vec<usize> = tokens[pos..pos + k_in].to_vec();
            pos += k_in;
            // fresh ports for the generator's bottom and top
            let port = |uf: &mut UnionFind, token: Option<usize>| {
                let p = uf.fresh();
                if let Some(t) = token {
                    uf.union(t, p);
                }
                p
            };
            match *g {
                Gen::Id(_) => out.push(ins[0]),
                Gen::CupL | Gen::CupR => {
                    let a = uf.fresh();
                    let b = uf.fresh();
                    uf.union(a, b);
                    out.extend([a, b]);
                }
                Gen::CapL | Gen::CapR => uf.union(ins[0], ins[1]),
                Gen::Cross(dir, sense) => {
                    let (bl, br) = (port(&mut uf, Some(ins[0])), port(&mut uf, Some(ins[1])));
                    let (tl, tr) = (port(&mut uf, None), port(&mut uf, None));
                    out.extend([tl, tr]);
                    let (ob_l, ob_r) = dir.bottom();
                    // strand a joins bottom-left and top-right, b the other diagonal
                    let a = if ob_l == Orient::Up { (bl, tr) } else { (tr, bl) };
                    let b = if ob_r == Orient::Up { (br, tl) } else { (tl, br) };
                    let over = sense == Sense::Over;
                    let a_over = match dir {
                        CrossDir::Up | CrossDir::Down => over,
                        CrossDir::Left | CrossDir::Right => !over,
                    };
                    for (i, o) in [a, b] {
                        is_in.insert(i, true);
                        is_in.insert(o, false);
                    }
                    crossings.push(Crossing { a, b, a_over, positive: over });
                }
                Gen::MergeUp(1) | Gen::SplitDown(1) | Gen::SplitUp(1) | Gen::MergeDown(1) => {
                    let bottom: Vec<usize> = ins.iter().map(|&t| port(&mut uf, Some(t))).collect();
                    let top: Vec<usize> = (0..g.arity().1).map(|_| port(&mut uf, None)).collect();
                    out.extend(top.iter().copied());
                    let v = match *g {
                        Gen::MergeUp(_) => Vertex::Merge { l: bottom[0], r: bottom[1], out: top[0] },
                        Gen::SplitUp(_) => Vertex::Split { inp: bottom[0], l: top[0], r: top[1] },
                        // flowing down, the flow's left is the page's right
                        Gen::SplitDown(_) => Vertex::Merge { l: top[1], r: top[0], out: bottom[0] },
                        _ => Vertex::Split { inp: top[0], l: bottom[1], r: bottom[0] },
                    };
                    match v {
                        Vertex::Merge { l, r, out } => {
                            is_in.insert(l, true);
                            is_in.insert(r, true);
                            is_in.insert(out, false);
                        }
                        Vertex::Split { inp, l, r } => {
                            is_in.insert(inp, true);
                            is_in.insert(l, false);
                            is_in.insert(r, false);
                        }
                    }
                    vertices.push(v);
                }
                _ => {
                    return Err(Error::InvalidArgument(alloc::format!(
                        "the rewrite evaluator handles thin crossings and labels up to 2, not {}",
                        g
                    )))
                }
            }
        }
        tokens = out;
    }
    // group ports by wire
    let mut by_root: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for x in 0..uf.0.len() {
        let r = uf.find(x);
        let e = by_root.entry(r).or_default();
        if is_in.contains_key(&x) {
            e.push(x);
        }
    }
    let mut wires = Vec::new();
    let mut circles = 0;
    for ports in by_root.values() {
        match ports.as_slice() {
            [] => circles += 1,
            [p, q] => wires.push((*p, *q)),
            _ => return Err(Error::InvalidArgument("malformed wiring".into())),
        }
    }
    Ok(Graph { crossings, vertices, wires, circles, is_in })
}

impl Graph {
    /// The link obtained by resolving every rung; `choice` bit `i` picks the
    /// crossing for rung `i`.
    fn resolve(&self, choice: usize) -> Result<Link, Error> {
        // a rung is a wire joining a merge's out to a split's in
        let merge_of: BTreeMap<usize, (usize, usize)> = self
            .vertices
            .iter()
            .filter_map(|v| if let Vertex::Merge { l, r, out } = *v { Some((out, (l, r))) } else { None })
            .collect();
        let split_of: BTreeMap<usize, (usize, usize)> = self
            .vertices
            .iter()
            .filter_map(|v| if let Vertex::Split { inp, l, r } = *v { Some((inp, (l, r))) } else { None })
            .collect();
        let mut crossings = self.crossings.clone();
        let mut pass: BTreeMap<usize, usize> = BTreeMap::new();
        let mut next = BTreeMap::new();
        let mut rung = 0;
        for &(p, q) in &self.wires {
            let (o, i) = if self.is_in[&p] { (q, p) } else { (p, q) };
            if self.is_in[&o] || !self.is_in[&i] {
                return Err(Error::InvalidArgument("wire joins two ports of the same direction".into()));
            }
            if let (Some(&(ml, mr)), Some(&(sl, sr))) = (merge_of.get(&o), split_of.get(&i)) {
                if choice >> rung & 1 == 1 {
                    crossings.push(Crossing { a: (ml, sr), b: (mr, sl), a_over: true, positive: true });
                } else {
                    pass.insert(ml, sl);
                    pass.insert(mr, sr);
                }
                rung += 1;
            } else if merge_of.contains_key(&o) || split_of.contains_key(&i) {
                return Err(Error::InvalidArgument("a 2-labelled edge must join a merge to a split".into()));
            } else {
                next.insert(o, i);
            }
        }
        Ok(normalize(crossings, pass, next, self.circles))
    }

    fn rungs(&self) -> usize {
        self.vertices.iter().filter(|v| matches!(v, Vertex::Merge { .. })).count()
    }
}

/// Removes pass-through strands, counting the circles made only of them.
fn normalize(crossings: Vec<Crossing>, mut pass: BTreeMap<usize, usize>, next: BTreeMap<usize, usize>, circles: usize) -> Link {
    let mut link = Link { crossings, next: BTreeMap::new(), circles };
    let outs: Vec<usize> = link.crossings.iter().flat_map(|c| [c.a.1, c.b.1]).collect();
    for o in outs {
        let mut p = next[&o];
        while let Some(q) = pass.remove(&p) {
            p = next[&q];
        }
        link.next.insert(o, p);
    }
    // whatever pass-through strands are left form closed circles
    while let Some((&start, _)) = pass.iter().next() {
        let mut p = start;
        while let Some(q) = pass.remove(&p) {
            p = next[&q];
        }
        link.circles += 1;
    }
    link
}

struct Skein {
    n: usize,
    steps: usize,
    budget: usize,
}

impl Skein {
    fn eval(&mut self, link: &Link) -> Result<LaurentFraction, Error> {
        self.steps += 1;
        if self.steps > self.budget {
            return Err(Error::Budget);
        }
        // traverse every component from its first in-port, noting the first
        // passage through each crossing
        let mut owner: BTreeMap<usize, (usize, bool)> = BTreeMap::new();
        for (i, c) in link.crossings.iter().enumerate() {
            owner.insert(c.a.0, (i, true));
            owner.insert(c.b.0, (i, false));
        }
        let mut seen_port = BTreeMap::new();
        let mut first_visit: Vec<Option<(usize, bool)>> = alloc::vec![None; link.crossings.len()];
        let mut order: Vec<usize> = Vec::new();
        let mut component_of = alloc::vec![[usize::MAX; 2]; link.crossings.len()];
        let mut components = 0;
        for start in link.crossings.iter().flat_map(|c| [c.a.0, c.b.0]) {
            if seen_port.contains_key(&start) {
                continue;
            }
            let mut p = start;
            loop {
                seen_port.insert(p, ());
                let (i, is_a) = owner[&p];
                let c = &link.crossings[i];
                let over = is_a == c.a_over;
                if first_visit[i].is_none() {
                    first_visit[i] = Some((components, over));
                    order.push(i);
                }
                component_of[i][usize::from(!is_a)] = components;
                let out = if is_a { c.a.1 } else { c.b.1 };
                p = link.next[&out];
                if p == start {
                    break;
                }
            }
            components += 1;
        }
        let bad = order.iter().copied().find(|&i| !first_visit[i].expect("visited").1);
        let n = self.n as i64;
        let nn = self.n as u32;
        let Some(i) = bad else {
            let writhe: i64 = link
                .crossings
                .iter()
                .enumerate()
                .filter(|(i, _)| component_of[*i][0] == component_of[*i][1])
                .map(|(_, c)| if c.positive { 1 } else { -1 })
                .sum();
            let mut v = LaurentPoly::from(1);
            for _ in 0..components + link.circles {
                v = &v * &qint(n);
            }
            return Ok(LaurentFraction::from(v) * qf((n * n - 1) * writhe, nn));
        };
        let c = link.crossings[i];
        let mut switched = link.clone();
        switched.crossings[i] = Crossing { a_over: !c.a_over, positive: !c.positive, ..c };
        let smoothed = smooth(link, i);
        let q_minus = LaurentFraction::from(LaurentPoly::q_pow(1) - LaurentPoly::q_pow(-1));
        let (sw, sm) = (self.eval(&switched)?, self.eval(&smoothed)?);
        Ok(if c.positive {
            qf(-2, nn) * sw + qf(-1, nn) * q_minus * sm
        } else {
            qf(2, nn) * sw - qf(1, nn) * q_minus * sm
        })
    }
}

/// The oriented smoothing at crossing `i`: each in-port continues along the
/// other strand's out-port.
fn smooth(link: &Link, i: usize) -> Link {
    let c = link.crossings[i];
    let mut crossings = link.crossings.clone();
    crossings.remove(i);
    let mut pass = BTreeMap::new();
    pass.insert(c.a.0, c.b.1);
    pass.insert(c.b.0, c.a.1);
    normalize(crossings, pass, link.next.clone(), link.circles)
}

/// Evaluates a closed diagram by rewriting, with the default step budget.
pub fn eval_closed_rewrite(d: &Diagram, n: usize) -> Result<LaurentFraction, Error> {
    eval_closed_rewrite_with(d, n, DEFAULT_BUDGET)
}

pub fn eval_closed_rewrite_with(d: &Diagram, n: usize, budget: usize) -> Result<LaurentFraction, Error> {
    let g = build_graph(d)?;
    let rungs = g.rungs();
    let mut skein = Skein { n, steps: 0, budget };
    let mut total = LaurentFraction::from_int(0);
    let nn = n as u32;
    for choice in 0..1usize << rungs {
        let link = g.resolve(choice)?;
        let crossed = choice.count_ones() as i64;
        // q^{1/n} per crossing, q^{-1} per identity
        let coeff = qf(crossed - (rungs as i64 - crossed) * n as i64, nn);
        total = total + coeff * skein.eval(&link)?;
    }
    Ok(total)
}

/// Linear extension of [`eval_closed_rewrite`] to closed expressions.
pub fn eval_expr_rewrite(w: &WebExpr, n: usize) -> Result<LaurentFraction, Error> {
    if !w.dom().is_empty() || !w.cod().is_empty() {
        return Err(Error::NotClosed);
    }
    let mut total = LaurentFraction::from_int(0);
    for (d, c) in w.terms() {
        total = total + c.clone() * eval_closed_rewrite(d, n)?;
    }
    Ok(total)
}
