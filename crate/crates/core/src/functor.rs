//! The representation functor: webs to matrices of `U_q(gl_n)`-intertwiners.
//!
//! An upward `k`-labelled strand goes to `Sym^k`, a downward one to its
//! dual; tensor words go to Kronecker products with the leftmost factor
//! slowest.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::cell::RefCell;

use num_traits::{One, Zero};

use crate::glnmod::{sym_dim, FactorDesc, SymBasis, TensorSpace};
use crate::linalg::Matrix;
use crate::qalg::{qint, LaurentFraction, LaurentPoly};
use crate::verify::{Report, Status};
use crate::webcat::{CrossDir, Diagram, Gen, Orient, Sense, WebExpr, WebObject};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Field,
    /// Every image of an expression with Laurent coefficients must itself
    /// be Laurent.
    Integral,
}

/// Rank, coefficient mode, and a context-local cache of generator images.
#[derive(Debug)]
pub struct GammaContext {
    pub n: usize,
    pub mode: Mode,
    cache: RefCell<BTreeMap<Gen, Matrix<LaurentPoly>>>,
}

impl Clone for GammaContext {
    fn clone(&self) -> Self {
        GammaContext { n: self.n, mode: self.mode, cache: RefCell::new(self.cache.borrow().clone()) }
    }
}

fn q(e: i64) -> LaurentPoly {
    LaurentPoly::q_pow(e)
}

fn count(m: &[usize], f: impl Fn(usize) -> bool) -> i64 {
    m.iter().filter(|&&a| f(a)).count() as i64
}

fn without(m: &[usize], j: usize) -> Vec<usize> {
    let mut out = m.to_vec();
    let p = out.iter().position(|&a| a == j).expect("j occurs");
    out.remove(p);
    out
}

fn with(m: &[usize], j: usize) -> Vec<usize> {
    let mut out = m.to_vec();
    out.push(j);
    out.sort_unstable();
    out
}

fn distinct(m: &[usize]) -> Vec<usize> {
    let mut d = m.to_vec();
    d.dedup();
    d
}

/// Dual of a map between two-factor spaces: transpose, with the factor
/// order swapped on both sides, `(A (x) B)* = B* (x) A*`.
fn dual_two(m: &Matrix<LaurentPoly>, dom: (usize, usize), cod: (usize, usize)) -> Matrix<LaurentPoly> {
    let swap = |i: usize, (a, b): (usize, usize)| (i % b) * a + i / b;
    let triples = m.entries().map(|(r, c, v)| (swap(c, dom), swap(r, cod), v.clone()));
    Matrix::from_triples(dom.0 * dom.1, cod.0 * cod.1, triples)
}

impl GammaContext {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "rank must be positive");
        GammaContext { n, mode: Mode::Field, cache: RefCell::new(BTreeMap::new()) }
    }

    pub fn integral(n: usize) -> Self {
        GammaContext { mode: Mode::Integral, ..Self::new(n) }
    }

    fn frac(&self, num: i64) -> LaurentPoly {
        LaurentPoly::q_frac_pow(num, self.n as u32)
    }

    pub fn space(&self, obj: &WebObject) -> TensorSpace {
        TensorSpace::new(
            self.n,
            obj.strands()
                .iter()
                .map(|s| if s.orient == Orient::Up { FactorDesc::sym(s.label) } else { FactorDesc::dual(s.label) })
                .collect(),
        )
    }

    pub fn dim(&self, obj: &WebObject) -> usize {
        obj.strands().iter().map(|s| sym_dim(self.n, s.label)).product()
    }

    /// `y_M (x) b_j -> q^{#{a in M : a > j}} y_{M+j}` on `Sym^k (x) Sym^1`.
    pub fn merge_up(&self, k: usize) -> Matrix<LaurentPoly> {
        let n = self.n;
        let (src, dst) = (SymBasis::new(n, k), SymBasis::new(n, k + 1));
        let mut t = Vec::new();
        for (mi, m) in src.tuples.iter().enumerate() {
            for j in 1..=n {
                t.push((dst.pos(&with(m, j)), mi * n + (j - 1), q(count(m, |a| a > j))));
            }
        }
        Matrix::from_triples(dst.len(), src.len() * n, t)
    }

    /// `y_M -> sum_j q^{-#{a in M : a < j}} [mult_M(j)] y_{M-j} (x) b_j`.
    pub fn split_up(&self, k: usize) -> Matrix<LaurentPoly> {
        let n = self.n;
        let (src, dst) = (SymBasis::new(n, k + 1), SymBasis::new(n, k));
        let mut t = Vec::new();
        for (yi, m) in src.tuples.iter().enumerate() {
            for j in distinct(m) {
                let c = q(-count(m, |a| a < j)) * qint(count(m, |a| a == j));
                t.push((dst.pos(&without(m, j)) * n + (j - 1), yi, c));
            }
        }
        Matrix::from_triples(dst.len() * n, src.len(), t)
    }

    /// The `(1,k)` merge in closed form: `b_j (x) y_M -> q^{#{a < j}} y_{M+j}`.
    pub fn merge_1k_closed(&self, k: usize) -> Matrix<LaurentPoly> {
        let n = self.n;
        let (src, dst) = (SymBasis::new(n, k), SymBasis::new(n, k + 1));
        let mut t = Vec::new();
        for j in 1..=n {
            for (mi, m) in src.tuples.iter().enumerate() {
                t.push((dst.pos(&with(m, j)), (j - 1) * src.len() + mi, q(count(m, |a| a < j))));
            }
        }
        Matrix::from_triples(dst.len(), src.len() * n, t)
    }

    /// The `(1,k)` split in closed form:
    /// `y_M -> sum_j q^{-#{a > j}} [mult_M(j)] b_j (x) y_{M-j}`.
    pub fn split_1k_closed(&self, k: usize) -> Matrix<LaurentPoly> {
        let n = self.n;
        let (src, dst) = (SymBasis::new(n, k + 1), SymBasis::new(n, k));
        let mut t = Vec::new();
        for (yi, m) in src.tuples.iter().enumerate() {
            for j in distinct(m) {
                let c = q(-count(m, |a| a > j)) * qint(count(m, |a| a == j));
                t.push(((j - 1) * dst.len() + dst.pos(&without(m, j)), yi, c));
            }
        }
        Matrix::from_triples(dst.len() * n, src.len(), t)
    }

    fn thin_dumbbell(&self) -> Matrix<LaurentPoly> {
        self.split_up(1).mul(&self.merge_up(1))
    }

    fn cross_up(&self, s: Sense) -> Matrix<LaurentPoly> {
        let n = self.n as i64;
        let id = Matrix::identity(self.n * self.n);
        let d = self.thin_dumbbell();
        match s {
            // -q^{-1-1/n} id + q^{-1/n} D
            Sense::Over => id.scale(&-self.frac(-n - 1)).add(&d.scale(&self.frac(-1))),
            // -q^{1+1/n} id + q^{1/n} D
            Sense::Under => id.scale(&-self.frac(n + 1)).add(&d.scale(&self.frac(1))),
        }
    }

    fn cup_l(&self) -> Matrix<LaurentPoly> {
        let n = self.n;
        Matrix::from_triples(n * n, 1, (0..n).map(|i| (i * n + i, 0, LaurentPoly::one())))
    }

    fn cap_l(&self) -> Matrix<LaurentPoly> {
        self.cup_l().transpose()
    }

    /// `(capL (x) id (x) id) . (id (x) X (x) id) . (id (x) id (x) cupL)`.
    fn cross_left(&self, s: Sense) -> Matrix<LaurentPoly> {
        let n = self.n;
        let i1 = Matrix::identity(n);
        let lower = Matrix::identity(n * n).kron(&self.cup_l());
        let mid = i1.kron(&self.cross_up(s)).kron(&i1);
        let upper = self.cap_l().kron(&Matrix::identity(n * n));
        upper.mul(&mid).mul(&lower)
    }

    fn invert(m: &Matrix<LaurentPoly>) -> Matrix<LaurentPoly> {
        m.to_fraction().inverse().and_then(|x| x.to_poly()).expect("crossing inverse is Laurent")
    }

    /// Image of an atomic generator, cached.
    pub fn generator(&self, g: Gen) -> Matrix<LaurentPoly> {
        if let Some(m) = self.cache.borrow().get(&g) {
            return m.clone();
        }
        let m = self.compute_generator(g);
        self.cache.borrow_mut().insert(g, m.clone());
        m
    }

    fn compute_generator(&self, g: Gen) -> Matrix<LaurentPoly> {
        let n = self.n;
        let n_i = n as i64;
        match g {
            Gen::Id(s) => Matrix::identity(sym_dim(n, s.label)),
            Gen::MergeUp(k) => self.merge_up(k),
            Gen::SplitUp(k) => self.split_up(k),
            // Half-turn rotations of the (1,k) split and merge.
            Gen::MergeDown(k) => dual_two(&self.split_1k_closed(k), (sym_dim(n, k + 1), 1), (n, sym_dim(n, k))),
            Gen::SplitDown(k) => dual_two(&self.merge_1k_closed(k), (n, sym_dim(n, k)), (sym_dim(n, k + 1), 1)),
            Gen::CupL => self.cup_l(),
            Gen::CapL => self.cap_l(),
            Gen::CupR => Matrix::from_triples(n * n, 1, (1..=n).map(|i| ((i - 1) * n + (i - 1), 0, q(2 * i as i64 - 1 - n_i)))),
            Gen::CapR => Matrix::from_triples(1, n * n, (1..=n).map(|i| (0, (i - 1) * n + (i - 1), q(n_i - 2 * i as i64 + 1)))),
            Gen::Cross(CrossDir::Up, s) => self.cross_up(s),
            Gen::Cross(CrossDir::Down, s) => dual_two(&self.cross_up(s), (n, n), (n, n)),
            Gen::Cross(CrossDir::Left, s) => self.cross_left(s),
            Gen::Cross(CrossDir::Right, s) => Self::invert(&self.cross_left(s.flip())),
            Gen::GreenDumbbell => Matrix::identity(n * n).scale(&qint(2)).sub(&self.thin_dumbbell()),
        }
    }

    fn layer(&self, layer: &[Gen]) -> Matrix<LaurentPoly> {
        let mut acc: Option<Matrix<LaurentPoly>> = None;
        let mut ids = 1usize;
        // Runs of identities are folded into one identity block.
        for g in layer {
            if let Gen::Id(s) = g {
                ids *= sym_dim(self.n, s.label);
                continue;
            }
            let m = self.generator(*g);
            let left = match acc.take() {
                Some(a) => a.kron(&Matrix::identity(ids)),
                None => Matrix::identity(ids),
            };
            ids = 1;
            acc = Some(left.kron(&m));
        }
        match acc {
            Some(a) => a.kron(&Matrix::identity(ids)),
            None => Matrix::identity(ids),
        }
    }

    /// Image of a single diagram.
    pub fn diagram(&self, d: &Diagram) -> Matrix<LaurentPoly> {
        let mut acc = Matrix::identity(self.dim(d.dom()));
        for l in d.layers() {
            acc = self.layer(l).mul(&acc);
        }
        acc
    }

    /// Image of a linear combination.
    pub fn expr(&self, w: &WebExpr) -> Result<Matrix<LaurentFraction>, Error> {
        let mut acc = Matrix::zeros(self.dim(w.cod()), self.dim(w.dom()));
        for (d, c) in w.terms() {
            acc = acc.add(&self.diagram(d).to_fraction().scale(c));
        }
        if self.mode == Mode::Integral && w.has_integral_coefficients() && !acc.is_integral() {
            return Err(Error::InvalidArgument(format!("non-integral image in integral mode for {}", w)));
        }
        Ok(acc)
    }

    /// Image of a closed web as a scalar.
    pub fn scalar(&self, w: &WebExpr) -> Result<LaurentFraction, Error> {
        if !w.dom().is_empty() || !w.cod().is_empty() {
            return Err(Error::NotClosed);
        }
        Ok(self.expr(w)?.get(0, 0))
    }
}

/// Image of an atomic generator.
pub fn gamma_generator(g: Gen, ctx: &GammaContext) -> Matrix<LaurentPoly> {
    ctx.generator(g)
}

/// Image of an expression.
pub fn gamma(w: &WebExpr, ctx: &GammaContext) -> Result<Matrix<LaurentFraction>, Error> {
    ctx.expr(w)
}

/// Passes iff every entry of the image is a Laurent polynomial.
pub fn gamma_integral_audit(w: &WebExpr, ctx: &GammaContext) -> Report {
    let params = format!("n={}", ctx.n);
    let field = GammaContext { mode: Mode::Field, ..ctx.clone() };
    match field.expr(w) {
        Err(e) => Report::fail("integral-audit", params, format!("{}", e)),
        Ok(m) => {
            let mut r = Report::new("integral-audit", params);
            match m.entries().find(|(_, _, v)| !v.is_integral()) {
                None => r.status = Status::Pass,
                Some((row, col, v)) => {
                    r.status = Status::Fail;
                    r.witness = Some(crate::verify::Witness { row, col, lhs: format!("{}", v), rhs: "a Laurent polynomial".into() });
                }
            }
            r.lhs = crate::verify::digest(&m);
            r
        }
    }
}

/// `true` when `m` is zero; handy in relation checks.
pub fn is_zero(m: &Matrix<LaurentFraction>) -> bool {
    m.entries().all(|(_, _, v)| v.is_zero())
}
