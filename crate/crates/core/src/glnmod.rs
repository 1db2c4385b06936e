//! `U_q(gl_n)`: generators, the standard module, symmetric powers and their
//! duals, and actions on tensor products.
//!
//! Basis vectors of `Sym^k` are weakly increasing tuples over `1..=n`, in
//! lexicographic order. On tensor products the leftmost factor is the
//! slowest-varying index.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::linalg::{rank, Matrix};
use crate::qalg::{qint, LaurentFraction, LaurentPoly};
use crate::verify::Report;
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GenKind {
    E,
    F,
    /// `L_i`
    Lplus,
    /// `L_i^{-1}`
    Lminus,
}

/// A generator of `U_q(gl_n)`; indices are 1-based as usual.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlgebraGen {
    pub kind: GenKind,
    pub index: usize,
}

impl AlgebraGen {
    pub fn e(i: usize) -> Self {
        AlgebraGen { kind: GenKind::E, index: i }
    }
    pub fn f(i: usize) -> Self {
        AlgebraGen { kind: GenKind::F, index: i }
    }
    pub fn l(i: usize) -> Self {
        AlgebraGen { kind: GenKind::Lplus, index: i }
    }
    pub fn l_inv(i: usize) -> Self {
        AlgebraGen { kind: GenKind::Lminus, index: i }
    }

    pub fn is_valid(&self, n: usize) -> bool {
        match self.kind {
            GenKind::E | GenKind::F => self.index >= 1 && self.index < n,
            _ => self.index >= 1 && self.index <= n,
        }
    }

    /// Every generator for rank `n`.
    pub fn all(n: usize) -> Vec<AlgebraGen> {
        let mut out = Vec::new();
        for i in 1..=n {
            out.push(Self::l(i));
            out.push(Self::l_inv(i));
        }
        for i in 1..n {
            out.push(Self::e(i));
            out.push(Self::f(i));
        }
        out
    }
}

impl fmt::Display for AlgebraGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            GenKind::E => write!(f, "E_{}", self.index),
            GenKind::F => write!(f, "F_{}", self.index),
            GenKind::Lplus => write!(f, "L_{}", self.index),
            GenKind::Lminus => write!(f, "L_{}^-1", self.index),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FactorKind {
    Sym,
    DualSym,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FactorDesc {
    pub kind: FactorKind,
    pub degree: usize,
}

impl FactorDesc {
    pub fn sym(k: usize) -> Self {
        FactorDesc { kind: FactorKind::Sym, degree: k }
    }
    pub fn dual(k: usize) -> Self {
        FactorDesc { kind: FactorKind::DualSym, degree: k }
    }
}

impl fmt::Display for FactorDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FactorKind::Sym => write!(f, "Sym^{}", self.degree),
            FactorKind::DualSym => write!(f, "Sym^{}*", self.degree),
        }
    }
}

/// Weakly increasing tuples over `1..=n` of length `k`, lexicographic.
pub fn sym_basis(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for j in start..=n {
            cur.push(j);
            rec(n, k, j, cur, out);
            cur.pop();
        }
    }
    rec(n, k, 1, &mut cur, &mut out);
    out
}

/// `C(n+k-1, k)`.
pub fn sym_dim(n: usize, k: usize) -> usize {
    if n == 0 {
        return usize::from(k == 0);
    }
    let mut acc: u128 = 1;
    for i in 0..k as u128 {
        acc = acc * (n as u128 + i) / (i + 1);
    }
    acc as usize
}

/// Lookup from tuples to basis positions of `Sym^k`.
#[derive(Clone, Debug)]
pub struct SymBasis {
    pub tuples: Vec<Vec<usize>>,
    index: BTreeMap<Vec<usize>, usize>,
}

impl SymBasis {
    pub fn new(n: usize, k: usize) -> Self {
        let tuples = sym_basis(n, k);
        let index = tuples.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect();
        SymBasis { tuples, index }
    }

    /// Position of a weakly increasing tuple.
    pub fn pos(&self, t: &[usize]) -> usize {
        self.index[t]
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }
}

/// A tensor product of symmetric powers and their duals.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TensorSpace {
    pub n: usize,
    pub factors: Vec<FactorDesc>,
}

impl TensorSpace {
    pub fn new(n: usize, factors: Vec<FactorDesc>) -> Self {
        TensorSpace { n, factors }
    }

    pub fn factor_dims(&self) -> Vec<usize> {
        self.factors.iter().map(|f| sym_dim(self.n, f.degree)).collect()
    }

    pub fn dim(&self) -> usize {
        self.factor_dims().iter().product()
    }

    /// Per-factor tuples of the basis vector at `idx`.
    pub fn basis_label(&self, mut idx: usize) -> Vec<Vec<usize>> {
        let dims = self.factor_dims();
        let mut out = vec![Vec::new(); dims.len()];
        for (slot, (f, d)) in self.factors.iter().zip(&dims).enumerate().rev() {
            out[slot] = sym_basis(self.n, f.degree)[idx % d].clone();
            idx /= d;
        }
        out
    }

    /// Weight of every basis vector (entry `i` counts `b_{i+1}`, negated on
    /// dual factors).
    pub fn weights(&self) -> Vec<Vec<i64>> {
        let mut acc: Vec<Vec<i64>> = vec![vec![0; self.n]];
        for f in &self.factors {
            let sign = if f.kind == FactorKind::Sym { 1 } else { -1 };
            let fw: Vec<Vec<i64>> = sym_basis(self.n, f.degree)
                .iter()
                .map(|t| {
                    let mut w = vec![0; self.n];
                    for &j in t {
                        w[j - 1] += sign;
                    }
                    w
                })
                .collect();
            acc = acc
                .iter()
                .flat_map(|a| fw.iter().map(move |b| a.iter().zip(b).map(|(x, y)| x + y).collect()))
                .collect();
        }
        acc
    }
}

impl fmt::Display for TensorSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "trivial");
        }
        for (i, x) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " (x) ")?;
            }
            write!(f, "{}", x)?;
        }
        Ok(())
    }
}

/// A vector in a tensor space.
#[derive(Clone, Debug, PartialEq)]
pub struct Vector {
    pub space: TensorSpace,
    pub coords: BTreeMap<usize, LaurentFraction>,
}

impl Vector {
    pub fn basis(space: TensorSpace, idx: usize) -> Self {
        let mut coords = BTreeMap::new();
        coords.insert(idx, LaurentFraction::one());
        Vector { space, coords }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn apply(&self, m: &Matrix<LaurentPoly>) -> Vector {
        let mut coords: BTreeMap<usize, LaurentFraction> = BTreeMap::new();
        for r in 0..m.rows() {
            let mut acc = LaurentFraction::zero();
            for (c, v) in m.row(r) {
                if let Some(x) = self.coords.get(c) {
                    acc = &acc + &(x * &LaurentFraction::from(v.clone()));
                }
            }
            if !acc.is_zero() {
                coords.insert(r, acc);
            }
        }
        Vector { space: self.space.clone(), coords }
    }
}

fn diag(entries: Vec<LaurentPoly>) -> Matrix<LaurentPoly> {
    let n = entries.len();
    Matrix::from_triples(n, n, entries.into_iter().enumerate().map(|(i, v)| (i, i, v)))
}

/// Matrix of a generator on `Sym^k`.
///
/// This is the action transported from `(Sym^1)^{(x)k}` along the q-sorting
/// map; summing the transported coproduct gives `E_i y = [#(i+1)] y'` and
/// `F_i y = [#i] y''`, which `sym_transport_matrix` re-derives in tests.
pub fn sym_gen_matrix(n: usize, k: usize, g: AlgebraGen) -> Matrix<LaurentPoly> {
    assert!(g.is_valid(n), "generator {} invalid for n = {}", g, n);
    let basis = SymBasis::new(n, k);
    let i = g.index;
    match g.kind {
        GenKind::Lplus | GenKind::Lminus => {
            let s = if g.kind == GenKind::Lplus { 1 } else { -1 };
            diag(basis.tuples.iter().map(|t| LaurentPoly::q_pow(s * t.iter().filter(|&&j| j == i).count() as i64)).collect())
        }
        GenKind::E | GenKind::F => {
            let (from, to) = if g.kind == GenKind::E { (i + 1, i) } else { (i, i + 1) };
            let mut triples = Vec::new();
            for (c, t) in basis.tuples.iter().enumerate() {
                let mult = t.iter().filter(|&&j| j == from).count();
                if mult == 0 {
                    continue;
                }
                let mut t2 = t.clone();
                let p = t2.iter().position(|&j| j == from).unwrap();
                t2[p] = to;
                t2.sort_unstable();
                triples.push((basis.pos(&t2), c, qint(mult as i64)));
            }
            Matrix::from_triples(basis.len(), basis.len(), triples)
        }
    }
}

/// Matrix of the antipode image `S(g)` on `Sym^k`.
pub fn antipode_matrix(n: usize, k: usize, g: AlgebraGen) -> Matrix<LaurentPoly> {
    let m = |h| sym_gen_matrix(n, k, h);
    let i = g.index;
    match g.kind {
        GenKind::Lplus => m(AlgebraGen::l_inv(i)),
        GenKind::Lminus => m(AlgebraGen::l(i)),
        // S(E_i) = -E_i L_i^{-1} L_{i+1}
        GenKind::E => m(g).mul(&m(AlgebraGen::l_inv(i))).mul(&m(AlgebraGen::l(i + 1))).neg(),
        // S(F_i) = -L_i L_{i+1}^{-1} F_i
        GenKind::F => m(AlgebraGen::l(i)).mul(&m(AlgebraGen::l_inv(i + 1))).mul(&m(g)).neg(),
    }
}

/// Matrix of a generator on one factor: on duals, `(g f)(v) = f(S(g) v)`,
/// i.e. the transpose of `S(g)` in the dual basis.
pub fn factor_gen_matrix(n: usize, f: FactorDesc, g: AlgebraGen) -> Matrix<LaurentPoly> {
    match f.kind {
        FactorKind::Sym => sym_gen_matrix(n, f.degree, g),
        FactorKind::DualSym => antipode_matrix(n, f.degree, g).transpose(),
    }
}

/// `K_i = L_i L_{i+1}^{-1}` on one factor, or its inverse.
fn factor_k(n: usize, f: FactorDesc, i: usize, inverse: bool) -> Matrix<LaurentPoly> {
    let (a, b) = if inverse { (AlgebraGen::l_inv(i), AlgebraGen::l(i + 1)) } else { (AlgebraGen::l(i), AlgebraGen::l_inv(i + 1)) };
    factor_gen_matrix(n, f, a).mul(&factor_gen_matrix(n, f, b))
}

fn kron_all(ms: &[Matrix<LaurentPoly>]) -> Matrix<LaurentPoly> {
    ms.iter().fold(Matrix::identity(1), |acc, m| acc.kron(m))
}

/// Matrix of a generator on a tensor space via the iterated coproduct:
/// `Δ(E_i) = E_i ⊗ K_i + 1 ⊗ E_i`, `Δ(F_i) = F_i ⊗ 1 + K_i^{-1} ⊗ F_i`,
/// `L` grouplike. On the trivial (empty) space `E`, `F` act by zero.
pub fn space_gen_matrix(space: &TensorSpace, g: AlgebraGen) -> Matrix<LaurentPoly> {
    let n = space.n;
    let fs = &space.factors;
    let ids: Vec<Matrix<LaurentPoly>> = space.factor_dims().into_iter().map(Matrix::identity).collect();
    match g.kind {
        GenKind::Lplus | GenKind::Lminus => {
            kron_all(&fs.iter().map(|f| factor_gen_matrix(n, *f, g)).collect::<Vec<_>>())
        }
        GenKind::E | GenKind::F => {
            let dim = space.dim();
            let mut acc = Matrix::zeros(dim, dim);
            for p in 0..fs.len() {
                let parts: Vec<Matrix<LaurentPoly>> = (0..fs.len())
                    .map(|r| {
                        use core::cmp::Ordering::*;
                        match (r.cmp(&p), g.kind) {
                            (Equal, _) => factor_gen_matrix(n, fs[r], g),
                            (Greater, GenKind::E) => factor_k(n, fs[r], g.index, false),
                            (Less, GenKind::F) => factor_k(n, fs[r], g.index, true),
                            _ => ids[r].clone(),
                        }
                    })
                    .collect();
                acc = acc.add(&kron_all(&parts));
            }
            acc
        }
    }
}

/// `g` acting on a vector.
pub fn act_tensor(g: AlgebraGen, v: &Vector) -> Vector {
    v.apply(&space_gen_matrix(&v.space, g))
}

/// `g` acting on the standard module `Sym^1`; returns the image of `b_i`.
pub fn act_standard(n: usize, g: AlgebraGen, i: usize) -> Vector {
    let space = TensorSpace::new(n, vec![FactorDesc::sym(1)]);
    act_tensor(g, &Vector::basis(space, i - 1))
}

/// The q-sorting surjection `(Sym^1)^{(x)k} -> Sym^k`,
/// `b_{i_1} (x) ... (x) b_{i_k} -> q^{inv} y_{sort}`.
pub fn q_sort_matrix(n: usize, k: usize) -> Matrix<LaurentPoly> {
    let tensor = TensorSpace::new(n, vec![FactorDesc::sym(1); k]);
    let basis = SymBasis::new(n, k);
    let triples = (0..tensor.dim()).map(|c| {
        let t: Vec<usize> = tensor.basis_label(c).into_iter().map(|x| x[0]).collect();
        let inv = (0..k).flat_map(|a| (a + 1..k).map(move |b| (a, b))).filter(|&(a, b)| t[a] > t[b]).count();
        let mut s = t.clone();
        s.sort_unstable();
        (basis.pos(&s), c, LaurentPoly::q_pow(inv as i64))
    });
    Matrix::from_triples(basis.len(), tensor.dim(), triples)
}

/// Checks that the action on `Sym^k` is the one transported along the
/// q-sorting map: `sort . g = g . sort` for all generators.
pub fn sym_transport_check(n: usize, k: usize) -> Report {
    let s = q_sort_matrix(n, k);
    let tensor = TensorSpace::new(n, vec![FactorDesc::sym(1); k]);
    Report::all(
        "sym-transport",
        format!("n={},k={}", n, k),
        AlgebraGen::all(n).into_iter().map(|g| {
            Report::matrices(
                format!("{}", g),
                "",
                &s.mul(&space_gen_matrix(&tensor, g)),
                &sym_gen_matrix(n, k, g).mul(&s),
            )
        }),
    )
}

/// `act(g) . M = M . act(g)` for every generator.
pub fn intertwiner_check(domain: &TensorSpace, codomain: &TensorSpace, m: &Matrix<LaurentPoly>) -> Report {
    let params = format!("{} -> {}", domain, codomain);
    if domain.n != codomain.n {
        return Report::fail("intertwiner", params, "different ranks");
    }
    for g in AlgebraGen::all(domain.n) {
        let lhs = space_gen_matrix(codomain, g).mul(m);
        let rhs = m.mul(&space_gen_matrix(domain, g));
        let r = Report::matrices("intertwiner", params.clone(), &lhs, &rhs);
        if !r.passed() {
            return r.with_note(format!("fails to commute with {}", g));
        }
    }
    let mut r = Report::new("intertwiner", params);
    r.status = crate::verify::Status::Pass;
    r
}

/// Exponents `c_i` with `K_{2rho} = prod_i K_i^{c_i}`, namely `c_i = i(n-i)`.
pub fn two_rho_exponents(n: usize) -> Vec<i64> {
    (1..n).map(|i| (i * (n - i)) as i64).collect()
}

/// `S^2(g) = K_{2rho} g K_{2rho}^{-1}` on the standard module, for
/// `g` among `E_i`, `F_i` (and trivially the `L`'s), with `K_{2rho}` given by
/// the exponents `c` on the `K_i`.
pub fn s2_pivotal_check_with(n: usize, c: &[i64]) -> Report {
    let m = |g| sym_gen_matrix(n, 1, g);
    // K_{2rho} on b_j is q^{c_j - c_{j-1}} (with c_0 = c_n = 0)
    let ce = |j: usize| if j == 0 || j == n { 0 } else { c[j - 1] };
    let k2r = diag((1..=n).map(|j| LaurentPoly::q_pow(ce(j) - ce(j - 1))).collect());
    let k2r_inv = diag((1..=n).map(|j| LaurentPoly::q_pow(ce(j - 1) - ce(j))).collect());
    let parts = AlgebraGen::all(n).into_iter().map(|g| {
        let i = g.index;
        // S^2 of each generator, expanded as matrices
        let s2 = match g.kind {
            GenKind::Lplus | GenKind::Lminus => m(g),
            GenKind::E => m(AlgebraGen::l(i))
                .mul(&m(AlgebraGen::l_inv(i + 1)))
                .mul(&m(g))
                .mul(&m(AlgebraGen::l_inv(i)))
                .mul(&m(AlgebraGen::l(i + 1))),
            GenKind::F => m(AlgebraGen::l(i))
                .mul(&m(AlgebraGen::l_inv(i + 1)))
                .mul(&m(g))
                .mul(&m(AlgebraGen::l_inv(i)))
                .mul(&m(AlgebraGen::l(i + 1))),
        };
        Report::matrices(format!("S^2({})", g), "", &s2, &k2r.mul(&m(g)).mul(&k2r_inv))
    });
    Report::all("s2-pivotal", format!("n={}", n), parts)
}

pub fn s2_pivotal_check(n: usize) -> Report {
    s2_pivotal_check_with(n, &two_rho_exponents(n))
}

/// Dimension of the commutant `{X : X g = g X}` of the specialized action at
/// `u = u0` (with `q = u0^root`), by an exact rational nullspace.
pub fn commutant_dim(space: &TensorSpace, root: u32, u0: &BigRational) -> Result<usize, Error> {
    let n = space.n;
    let dim = space.dim();
    let weights = space.weights();
    // X preserves weights, so only same-weight entries are unknowns
    let mut unknown: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for r in 0..dim {
        for c in 0..dim {
            if weights[r] == weights[c] {
                let k = unknown.len();
                unknown.insert((r, c), k);
            }
        }
    }
    let spec = |m: Matrix<LaurentPoly>| -> Result<Matrix<BigRational>, Error> {
        m.try_map(|v| LaurentFraction::from(v.clone()).specialize(root, u0))
    };
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    for i in 1..n {
        for g in [AlgebraGen::e(i), AlgebraGen::f(i)] {
            let m = spec(space_gen_matrix(space, g))?;
            let mt = m.transpose();
            // (M X - X M)[r][c] = 0 for every (r, c)
            let mut eqs: BTreeMap<(usize, usize), BTreeMap<usize, BigRational>> = BTreeMap::new();
            for (&(a, c), &x) in &unknown {
                // M X: sum_a M[r][a] X[a][c]
                for (r, v) in mt.row(a) {
                    let e = eqs.entry((*r, c)).or_default().entry(x).or_insert_with(BigRational::zero);
                    *e += v;
                }
                // X M: sum_c X[a][c] M[c][col]
                for (col, v) in m.row(c) {
                    let e = eqs.entry((a, *col)).or_default().entry(x).or_insert_with(BigRational::zero);
                    *e -= v;
                }
            }
            for (_, eq) in eqs {
                if eq.values().any(|v| !v.is_zero()) {
                    let mut row = vec![BigRational::zero(); unknown.len()];
                    for (k, v) in eq {
                        row[k] = v;
                    }
                    rows.push(row);
                }
            }
        }
    }
    Ok(unknown.len() - rank(rows))
}

/// Renders a vector as `c b_i (x) ...` text, used by the CLI and tests.
pub fn render_vector(v: &Vector) -> String {
    if v.is_zero() {
        return String::from("0");
    }
    let mut out = String::new();
    for (k, (idx, c)) in v.coords.iter().enumerate() {
        if k > 0 {
            out.push_str(" + ");
        }
        let label: Vec<String> = v
            .space
            .basis_label(*idx)
            .iter()
            .zip(&v.space.factors)
            .map(|(t, f)| {
                let s: Vec<String> = t.iter().map(|j| format!("{}", j)).collect();
                let star = if f.kind == FactorKind::DualSym { "*" } else { "" };
                format!("y({}){}", s.join(","), star)
            })
            .collect();
        out.push_str(&format!("({})*{}", c, label.join("(x)")));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qalg::qint;

    fn sp(n: usize, fs: &[FactorDesc]) -> TensorSpace {
        TensorSpace::new(n, fs.to_vec())
    }

    fn coord(v: &Vector, idx: usize) -> LaurentFraction {
        v.coords.get(&idx).cloned().unwrap_or_else(LaurentFraction::zero)
    }

    #[test]
    fn standard_module_rules() {
        let v = act_standard(2, AlgebraGen::f(1), 1);
        assert_eq!(v.coords.len(), 1);
        assert!(coord(&v, 1).is_one());
        assert!(act_standard(2, AlgebraGen::e(1), 1).is_zero());
        let v = act_standard(3, AlgebraGen::l(2), 1);
        assert!(coord(&v, 0).is_one());
        let v = act_standard(3, AlgebraGen::l(2), 2);
        assert_eq!(coord(&v, 1), LaurentFraction::from(LaurentPoly::q_pow(1)));
    }

    #[test]
    fn tensor_actions() {
        let s = sp(2, &[FactorDesc::sym(1), FactorDesc::sym(1)]);
        // b2 (x) b2 has index 3; b1(x)b2 is 1, b2(x)b1 is 2
        let v = act_tensor(AlgebraGen::e(1), &Vector::basis(s.clone(), 3));
        assert_eq!(coord(&v, 1), LaurentFraction::from(LaurentPoly::q_pow(-1)));
        assert!(coord(&v, 2).is_one());
        assert_eq!(v.coords.len(), 2);
        let v = act_tensor(AlgebraGen::l(1), &Vector::basis(s, 0));
        assert_eq!(coord(&v, 0), LaurentFraction::from(LaurentPoly::q_pow(2)));
        let triv = sp(2, &[]);
        assert!(act_tensor(AlgebraGen::f(1), &Vector::basis(triv, 0)).is_zero());
    }

    #[test]
    fn sym_actions() {
        let s = sp(2, &[FactorDesc::sym(2)]);
        let v = act_tensor(AlgebraGen::f(1), &Vector::basis(s.clone(), 0));
        assert_eq!(coord(&v, 1), LaurentFraction::from(qint(2)));
        let v = act_tensor(AlgebraGen::l(1), &Vector::basis(s.clone(), 1));
        assert_eq!(coord(&v, 1), LaurentFraction::from(LaurentPoly::q_pow(1)));
        assert!(act_tensor(AlgebraGen::e(1), &Vector::basis(s, 0)).is_zero());
    }

    #[test]
    fn dual_actions() {
        let s = sp(2, &[FactorDesc::dual(1)]);
        let v = act_tensor(AlgebraGen::l(1), &Vector::basis(s.clone(), 0));
        assert_eq!(coord(&v, 0), LaurentFraction::from(LaurentPoly::q_pow(-1)));
        // E_1 b_1^* = -q b_2^*, E_1 b_2^* = 0
        let v = act_tensor(AlgebraGen::e(1), &Vector::basis(s.clone(), 0));
        assert_eq!(v.coords.len(), 1);
        assert_eq!(coord(&v, 1), -LaurentFraction::from(LaurentPoly::q_pow(1)));
        assert!(act_tensor(AlgebraGen::e(1), &Vector::basis(s.clone(), 1)).is_zero());
        // F_1 b_2^* = -q^{-1} b_1^*, F_1 b_1^* = 0
        let v = act_tensor(AlgebraGen::f(1), &Vector::basis(s.clone(), 1));
        assert_eq!(coord(&v, 0), -LaurentFraction::from(LaurentPoly::q_pow(-1)));
        assert!(act_tensor(AlgebraGen::f(1), &Vector::basis(s, 0)).is_zero());
    }

    #[test]
    fn transport_is_well_defined() {
        for n in 1..=3 {
            for k in 0..=3 {
                let r = sym_transport_check(n, k);
                assert!(r.passed(), "{}", r);
            }
        }
    }

    #[test]
    fn sym_dimensions() {
        for n in 1..=4 {
            for k in 0..=4 {
                assert_eq!(sym_basis(n, k).len(), sym_dim(n, k));
            }
        }
        assert_eq!(sym_basis(2, 2), vec![vec![1, 1], vec![1, 2], vec![2, 2]]);
    }

    #[test]
    fn pivotal_identity() {
        for n in 2..=4 {
            assert!(s2_pivotal_check(n).passed());
        }
        // the exponent pattern (n-1, n-2, ..., 1) agrees with i(n-i) only for n = 2
        assert!(s2_pivotal_check_with(2, &[1]).passed());
        assert!(!s2_pivotal_check_with(3, &[2, 1]).passed());
    }

    #[test]
    fn commutants() {
        let u0 = BigRational::from_integer(2.into());
        let v2 = sp(2, &[FactorDesc::sym(1); 2]);
        assert_eq!(commutant_dim(&v2, 1, &u0), Ok(2));
        let v3 = sp(2, &[FactorDesc::sym(1); 3]);
        assert_eq!(commutant_dim(&v3, 1, &u0), Ok(5));
        assert_eq!(commutant_dim(&sp(3, &[FactorDesc::sym(2)]), 1, &u0), Ok(1));
        // V (x) V* = trivial + adjoint
        assert_eq!(commutant_dim(&sp(2, &[FactorDesc::sym(1), FactorDesc::dual(1)]), 1, &u0), Ok(2));
        for u in [3, 5, 7] {
            let u = BigRational::from_integer(u.into());
            assert_eq!(commutant_dim(&v3, 1, &u), Ok(5));
        }
    }

    fn ops(n: usize, k: usize) -> (TensorSpace, impl Fn(AlgebraGen) -> Matrix<LaurentPoly>) {
        let s = sp(n, &vec![FactorDesc::sym(1); k]);
        let s2 = s.clone();
        (s, move |g| space_gen_matrix(&s2, g))
    }

    #[test]
    fn defining_relations_on_tensor_powers() {
        for n in 2..=3 {
            for k in 1..=3 {
                let (s, m) = ops(n, k);
                let dim = s.dim();
                for a in 1..=n {
                    for b in 1..=n {
                        assert_eq!(m(AlgebraGen::l(a)).mul(&m(AlgebraGen::l(b))), m(AlgebraGen::l(b)).mul(&m(AlgebraGen::l(a))));
                    }
                    assert!(m(AlgebraGen::l(a)).mul(&m(AlgebraGen::l_inv(a))).is_identity());
                    for j in 1..n {
                        let pair = (a == j) as i64 - (a == j + 1) as i64;
                        let lhs = m(AlgebraGen::l(a)).mul(&m(AlgebraGen::e(j)));
                        let rhs = m(AlgebraGen::e(j)).mul(&m(AlgebraGen::l(a))).scale(&LaurentPoly::q_pow(pair));
                        assert_eq!(lhs, rhs);
                        let lhs = m(AlgebraGen::l(a)).mul(&m(AlgebraGen::f(j)));
                        let rhs = m(AlgebraGen::f(j)).mul(&m(AlgebraGen::l(a))).scale(&LaurentPoly::q_pow(-pair));
                        assert_eq!(lhs, rhs);
                    }
                }
                let qq = LaurentPoly::from_terms(1, [(1, 1), (-1, -1)]);
                for i in 1..n {
                    for j in 1..n {
                        let comm = m(AlgebraGen::e(i)).mul(&m(AlgebraGen::f(j))).sub(&m(AlgebraGen::f(j)).mul(&m(AlgebraGen::e(i))));
                        let expect = if i == j {
                            let k = m(AlgebraGen::l(i)).mul(&m(AlgebraGen::l_inv(i + 1)));
                            let kinv = m(AlgebraGen::l_inv(i)).mul(&m(AlgebraGen::l(i + 1)));
                            k.sub(&kinv)
                        } else {
                            Matrix::zeros(dim, dim)
                        };
                        assert_eq!(comm.scale(&qq), expect);
                        for kind in [AlgebraGen::e, AlgebraGen::f] {
                            let (x, y) = (m(kind(i)), m(kind(j)));
                            if i.abs_diff(j) == 1 {
                                let serre = x.mul(&x).mul(&y).sub(&x.mul(&y).mul(&x).scale(&qint(2))).add(&y.mul(&x).mul(&x));
                                assert!(serre.is_zero());
                            } else {
                                assert_eq!(x.mul(&y), y.mul(&x));
                            }
                        }
                    }
                }
            }
        }
    }
}
