//! Thick and derived webs, built from the atomic generators.
//!
//! Thick edges are exploded along left combs: a `k`-labelled strand splits
//! off its rightmost thin strand first, and merges absorb thin strands from
//! the right.

use alloc::string::ToString;
use alloc::vec::Vec;

use super::diagram::{CrossDir, Gen, Sense};
use super::expr::{tensor_all, Flavor, WebExpr};
use super::object::{Orient, Strand, WebObject};
use crate::qalg::{qf, qfact, LaurentFraction};

fn g(x: Gen) -> WebExpr {
    WebExpr::gen(x)
}

fn c(w: WebExpr, below: WebExpr) -> WebExpr {
    w.compose(&below).expect("builder boundaries agree")
}

fn idw(strands: &[Strand]) -> WebExpr {
    WebExpr::id(&WebObject::new(strands.iter().copied()))
}

fn id1(k: usize, o: Orient) -> WebExpr {
    idw(&[Strand::new(k, o)])
}

fn thin(o: Orient, k: usize) -> Vec<Strand> {
    alloc::vec![Strand::new(1, o); k]
}

/// `1 / [k]!`
pub fn inv_fact(k: usize) -> LaurentFraction {
    LaurentFraction::from(qfact(k as u32)).inv().expect("[k]! is nonzero")
}

fn merge_gen(k: usize, o: Orient) -> Gen {
    match o {
        Orient::Up => Gen::MergeUp(k),
        Orient::Down => Gen::MergeDown(k),
    }
}

fn split_gen(k: usize, o: Orient) -> Gen {
    match o {
        Orient::Up => Gen::SplitUp(k),
        Orient::Down => Gen::SplitDown(k),
    }
}

/// Left-comb merge of `k` thin strands into one `k`-labelled strand.
pub fn merge_tree(k: usize, o: Orient) -> WebExpr {
    if k <= 1 {
        return idw(&thin(o, k));
    }
    c(g(merge_gen(k - 1, o)), merge_tree(k - 1, o).tensor(&id1(1, o)))
}

/// Left-comb split of a `k`-labelled strand into `k` thin strands.
pub fn split_tree(k: usize, o: Orient) -> WebExpr {
    if k <= 1 {
        return idw(&thin(o, k));
    }
    c(split_tree(k - 1, o).tensor(&id1(1, o)), g(split_gen(k - 1, o)))
}

/// The thin 2-dumbbell `s(1,1) . m(1,1)`.
pub fn dumbbell_thin() -> WebExpr {
    c(g(Gen::SplitUp(1)), g(Gen::MergeUp(1)))
}

/// Thin upward crossing as the two-term expansion of the chosen flavor.
pub fn thin_cross(n: usize, sense: Sense, flavor: Flavor) -> WebExpr {
    let m = n as i64;
    let n = n as u32;
    let id = idw(&thin(Orient::Up, 2));
    let (a, b, d) = match (flavor, sense) {
        (Flavor::Symmetric, Sense::Over) => (-qf(-m - 1, n), qf(-1, n), dumbbell_thin()),
        (Flavor::Symmetric, Sense::Under) => (-qf(m + 1, n), qf(1, n), dumbbell_thin()),
        (Flavor::Exterior, Sense::Over) => (qf(m - 1, n), -qf(-1, n), g(Gen::GreenDumbbell)),
        (Flavor::Exterior, Sense::Under) => (qf(1 - m, n), -qf(1, n), g(Gen::GreenDumbbell)),
    };
    id.scale(&a).add(&d.scale(&b)).expect("same boundary").with_flavor(flavor)
}

/// Thin crossings moving the strands `a` (left) past `b` (right). All
/// strands are thin; each crossing gets the sign `sense`.
pub fn cross_grid(a: &[Orient], b: &[Orient], sense: Sense) -> WebExpr {
    let mut word: Vec<Orient> = a.iter().chain(b).copied().collect();
    let mut acc = idw(&word.iter().map(|&o| Strand::new(1, o)).collect::<Vec<_>>());
    for i in (0..a.len()).rev() {
        for j in 0..b.len() {
            let p = i + j;
            let x = Gen::Cross(CrossDir::of(word[p], word[p + 1]), sense);
            let layer = tensor_all(&[
                idw(&word[..p].iter().map(|&o| Strand::new(1, o)).collect::<Vec<_>>()),
                g(x),
                idw(&word[p + 2..].iter().map(|&o| Strand::new(1, o)).collect::<Vec<_>>()),
            ]);
            acc = c(layer, acc);
            word.swap(p, p + 1);
        }
    }
    acc
}

/// Crossing of two thick strands, by explosion: `a` (left) passes to the
/// right. Identity when a label is zero.
pub fn thick_cross(a: Strand, b: Strand, sense: Sense) -> WebExpr {
    if a.label == 0 || b.label == 0 {
        return idw(&[a, b]);
    }
    let (k, l) = (a.label, b.label);
    let grid = cross_grid(&alloc::vec![a.orient; k], &alloc::vec![b.orient; l], sense);
    let bottom = split_tree(k, a.orient).tensor(&split_tree(l, b.orient));
    let top = merge_tree(l, b.orient).tensor(&merge_tree(k, a.orient));
    c(top, c(grid, bottom)).scale(&(inv_fact(k) * inv_fact(l)))
}

/// Upward thick crossing of type `(k,l)`.
pub fn thick_cross_up(k: usize, l: usize, sense: Sense) -> WebExpr {
    thick_cross(Strand::up(k), Strand::up(l), sense)
}

/// The `(1,k)`-merge `1^ * k^ -> (k+1)^`.
pub fn merge_1k(n: usize, k: usize) -> WebExpr {
    if k == 0 {
        return id1(1, Orient::Up);
    }
    c(g(Gen::MergeUp(k)), thick_cross_up(1, k, Sense::Over)).scale(&qf(k as i64 - (k * n) as i64, n as u32))
}

/// The `(1,k)`-split `(k+1)^ -> 1^ * k^`.
pub fn split_1k(n: usize, k: usize) -> WebExpr {
    if k == 0 {
        return id1(1, Orient::Up);
    }
    c(thick_cross_up(k, 1, Sense::Over), g(Gen::SplitUp(k))).scale(&qf(k as i64 - (k * n) as i64, n as u32))
}

/// Thick merge `k * l -> k+l` in either orientation: the `l` strand is
/// exploded and its thin strands absorbed one at a time.
pub fn thick_merge(k: usize, l: usize, o: Orient) -> WebExpr {
    if k == 0 || l == 0 {
        return id1(k + l, o);
    }
    let mut acc = id1(k, o).tensor(&split_tree(l, o));
    for i in 0..l {
        let layer = g(merge_gen(k + i, o)).tensor(&idw(&thin(o, l - 1 - i)));
        acc = c(layer, acc);
    }
    acc.scale(&inv_fact(l))
}

/// Thick split `k+l -> k * l` in either orientation.
pub fn thick_split(k: usize, l: usize, o: Orient) -> WebExpr {
    if k == 0 || l == 0 {
        return id1(k + l, o);
    }
    let mut acc = id1(k + l, o);
    for i in (0..l).rev() {
        let layer = g(split_gen(k + i, o)).tensor(&idw(&thin(o, l - 1 - i)));
        acc = c(layer, acc);
    }
    c(id1(k, o).tensor(&merge_tree(l, o)), acc).scale(&inv_fact(l))
}

/// The dumbbell `split(k,l) . merge(k,l)` on `k^ * l^`.
pub fn dumbbell(k: usize, l: usize) -> WebExpr {
    c(thick_split(k, l, Orient::Up), thick_merge(k, l, Orient::Up))
}

/// `F^(j)` ladder `k^ * l^ -> (k-j)^ * (l+j)^`; zero if `j > k`.
pub fn ladder_f(j: usize, k: usize, l: usize) -> WebExpr {
    if j > k {
        return WebExpr::zero(WebObject::up(&[k, l]), WebObject::empty());
    }
    let lower = thick_split(k - j, j, Orient::Up).tensor(&id1(l, Orient::Up));
    let upper = id1(k - j, Orient::Up).tensor(&thick_merge(j, l, Orient::Up));
    c(upper, lower)
}

/// `E^(j)` ladder `k^ * l^ -> (k+j)^ * (l-j)^`; zero if `j > l`.
pub fn ladder_e(j: usize, k: usize, l: usize) -> WebExpr {
    if j > l {
        return WebExpr::zero(WebObject::up(&[k, l]), WebObject::empty());
    }
    let lower = id1(k, Orient::Up).tensor(&thick_split(j, l - j, Orient::Up));
    let upper = thick_merge(k, j, Orient::Up).tensor(&id1(l - j, Orient::Up));
    c(upper, lower)
}

/// Thin caps on a word of the form `x_1 .. x_m y_m .. y_1`, pairing
/// innermost first.
fn nested_thin_caps(word: &[Orient]) -> WebExpr {
    let m = word.len() / 2;
    let mut acc = idw(&word.iter().map(|&o| Strand::new(1, o)).collect::<Vec<_>>());
    let mut cur = word.to_vec();
    for _ in 0..m {
        let p = cur.len() / 2 - 1;
        let cap = if cur[p] == Orient::Down { Gen::CapL } else { Gen::CapR };
        let layer = tensor_all(&[
            idw(&cur[..p].iter().map(|&o| Strand::new(1, o)).collect::<Vec<_>>()),
            g(cap),
            idw(&cur[p + 2..].iter().map(|&o| Strand::new(1, o)).collect::<Vec<_>>()),
        ]);
        acc = c(layer, acc);
        cur.drain(p..p + 2);
    }
    acc
}

fn nested_thin_cups(word: &[Orient]) -> WebExpr {
    let m = word.len() / 2;
    let mut acc = WebExpr::id(&WebObject::empty());
    let mut cur: Vec<Orient> = Vec::new();
    for i in (0..m).rev() {
        let cup = if word[i] == Orient::Up { Gen::CupL } else { Gen::CupR };
        let p = cur.len() / 2;
        let layer = tensor_all(&[
            idw(&cur[..p].iter().map(|&o| Strand::new(1, o)).collect::<Vec<_>>()),
            g(cup),
            idw(&cur[p..].iter().map(|&o| Strand::new(1, o)).collect::<Vec<_>>()),
        ]);
        acc = c(layer, acc);
        cur.insert(p, word[i].flip());
        cur.insert(p, word[i]);
    }
    acc
}

/// Cap closing `kv * k^` (leftward, `left = Down`) or `k^ * kv`
/// (rightward), by explosion.
pub fn cap(k: usize, left: Orient) -> WebExpr {
    if k == 0 {
        return WebExpr::id(&WebObject::empty());
    }
    let right = left.flip();
    let mut word = thin(left, k);
    word.extend(thin(right, k));
    let words: Vec<Orient> = word.iter().map(|s| s.orient).collect();
    let bottom = split_tree(k, left).tensor(&split_tree(k, right));
    c(nested_thin_caps(&words), bottom).scale(&inv_fact(k))
}

/// Cup producing `k^ * kv` (`left = Up`) or `kv * k^`.
pub fn cup(k: usize, left: Orient) -> WebExpr {
    if k == 0 {
        return WebExpr::id(&WebObject::empty());
    }
    let right = left.flip();
    let mut word = thin(left, k);
    word.extend(thin(right, k));
    let words: Vec<Orient> = word.iter().map(|s| s.orient).collect();
    let top = merge_tree(k, left).tensor(&merge_tree(k, right));
    c(top, nested_thin_cups(&words)).scale(&inv_fact(k))
}

/// Leftward cap `kv * k^ -> 0`.
pub fn cap_l(k: usize) -> WebExpr {
    cap(k, Orient::Down)
}

/// Leftward cup `0 -> k^ * kv`.
pub fn cup_l(k: usize) -> WebExpr {
    cup(k, Orient::Up)
}

/// Rightward cap `k^ * kv -> 0`.
pub fn cap_r(k: usize) -> WebExpr {
    cap(k, Orient::Up)
}

/// Rightward cup `0 -> kv * k^`.
pub fn cup_r(k: usize) -> WebExpr {
    cup(k, Orient::Down)
}

/// Coevaluation `0 -> A * A*`, the last strand of `A` innermost.
pub fn coev(a: &WebObject) -> WebExpr {
    let mut acc = unit();
    for s in a.strands().iter().rev() {
        acc = c(idw(&[*s]).tensor(&acc).tensor(&idw(&[s.dual()])), cup(s.label, s.orient));
    }
    acc
}

/// Evaluation `A* * A -> 0`, the first strand of `A` innermost.
pub fn ev(a: &WebObject) -> WebExpr {
    let mut acc = unit();
    for s in a.strands() {
        acc = c(cap(s.label, s.orient.flip()), idw(&[s.dual()]).tensor(&acc).tensor(&idw(&[*s])));
    }
    acc
}

/// Right-handed evaluation `A * A* -> 0`, the last strand of `A` innermost.
pub fn ev_r(a: &WebObject) -> WebExpr {
    let mut acc = unit();
    for s in a.strands().iter().rev() {
        acc = c(cap(s.label, s.orient), idw(&[*s]).tensor(&acc).tensor(&idw(&[s.dual()])));
    }
    acc
}

/// Right-handed coevaluation `0 -> A* * A`, the first strand of `A`
/// innermost.
pub fn coev_r(a: &WebObject) -> WebExpr {
    let mut acc = unit();
    for s in a.strands() {
        acc = c(idw(&[s.dual()]).tensor(&acc).tensor(&idw(&[*s])), cup(s.label, s.orient.flip()));
    }
    acc
}

/// Moves the bottom boundary to the top: `w: A -> B` becomes
/// `0 -> B * A*`.
pub fn bend(w: &WebExpr) -> WebExpr {
    let a = w.dom().clone();
    c(w.tensor(&WebExpr::id(&a.dual())), coev(&a))
}

/// Inverse of [`bend`]: `v: 0 -> B * A*` becomes `A -> B`.
pub fn unbend(v: &WebExpr, a: &WebObject) -> Result<WebExpr, crate::Error> {
    let cod = v.cod().strands();
    let ad = a.dual();
    if cod.len() < ad.len() || cod[cod.len() - ad.len()..] != *ad.strands() {
        return Err(crate::Error::BoundaryMismatch { layer: None, expected: alloc::format!("... * {}", ad), found: v.cod().to_string() });
    }
    let b = WebObject(cod[..cod.len() - ad.len()].to_vec());
    let lower = v.tensor(&WebExpr::id(a));
    let upper = WebExpr::id(&b).tensor(&ev(a));
    upper.compose(&lower)
}

/// The dual morphism `B* -> A*` of `w: A -> B`, i.e. `w` rotated by a half
/// turn.
pub fn dual(w: &WebExpr) -> WebExpr {
    let (a, b) = (w.dom().clone(), w.cod().clone());
    let (ad, bd) = (WebExpr::id(&a.dual()), WebExpr::id(&b.dual()));
    let lower = bd.tensor(&coev(&a));
    let mid = bd.tensor(w).tensor(&ad);
    let upper = ev(&b).tensor(&ad);
    c(upper, c(mid, lower))
}

/// The symmetric projector `e_k` on `(1^)^k`.
pub fn projector(k: usize) -> WebExpr {
    c(split_tree(k, Orient::Up), merge_tree(k, Orient::Up)).scale(&inv_fact(k))
}

/// `[c] w` with an integer coefficient.
pub fn times(c0: i64, w: &WebExpr) -> WebExpr {
    w.scale(&LaurentFraction::from_int(c0))
}

/// `1` as a web on the empty object.
pub fn unit() -> WebExpr {
    WebExpr::id(&WebObject::empty())
}
