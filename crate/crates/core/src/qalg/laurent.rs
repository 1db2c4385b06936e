use alloc::borrow::Cow;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A Laurent polynomial in `u = q^(1/N)` with arbitrary-precision integer
/// coefficients.
///
/// Exponents are stored in units of `1/N`. The coefficient vector is dense
/// starting at exponent `low`, with no zero at either end; zero has an empty
/// vector. `N` is kept minimal (no common factor with every exponent), so a
/// value has exactly one representation and `q^(2/4)` is stored as `q^(1/2)`.
/// Operands with different root orders are lifted to the lcm, which lets
/// quantum integers in `Z[q, q^{-1}]` mix freely with values in `q^(1/n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    root: u32,
    low: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn from_int(c: impl Into<BigInt>) -> Self {
        Self::monomial(1, 0, c)
    }

    /// `c * u^exp` with `u = q^(1/root)`.
    pub fn monomial(root: u32, exp: i64, c: impl Into<BigInt>) -> Self {
        assert!(root > 0, "root order must be positive");
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_dense(root, exp, vec![c])
    }

    /// `q^k` for an integer `k`.
    pub fn q_pow(k: i64) -> Self {
        Self::monomial(1, k, 1)
    }

    /// `q^(num/den)`.
    pub fn q_frac_pow(num: i64, den: u32) -> Self {
        Self::monomial(den, num, 1)
    }

    /// Builds a value from `(exponent, coefficient)` pairs in units of
    /// `1/root`; repeated exponents are summed.
    pub fn from_terms<I, C>(root: u32, terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let terms: Vec<(i64, BigInt)> = terms.into_iter().map(|(e, c)| (e, c.into())).collect();
        if terms.is_empty() {
            return Self::zero();
        }
        let lo = terms.iter().map(|t| t.0).min().unwrap();
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - lo) as usize] += c;
        }
        Self::from_dense(root, lo, coeffs)
    }

    pub(crate) fn from_dense(root: u32, low: i64, mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead);
        let low = low + lead as i64;
        // reduce the root order to the smallest one that still fits
        let mut g = (root as i64).gcd(&low);
        for (i, c) in coeffs.iter().enumerate() {
            if g == 1 {
                break;
            }
            if !c.is_zero() {
                g = g.gcd(&(i as i64));
            }
        }
        if g > 1 {
            let coeffs = coeffs.into_iter().step_by(g as usize).collect();
            return Self { root: root / g as u32, low: low / g, coeffs };
        }
        Self { root, low, coeffs }
    }

    /// The (minimal) root order `N` of the stored exponents.
    pub fn root(&self) -> u32 {
        self.root
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.is_empty() || (self.coeffs.len() == 1 && self.low == 0)
    }

    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    /// Lowest exponent present, in units of `1/root()`.
    pub fn min_exp(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then_some(self.low)
    }

    pub fn max_exp(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    /// Coefficient of `q^(exp/root)`.
    pub fn coeff_at(&self, root: u32, exp: i64) -> BigInt {
        let r = lcm(root, self.root);
        let (low, coeffs) = self.dense_at(r);
        let i = exp * (r / root) as i64 - low;
        if i < 0 || i >= coeffs.len() as i64 {
            BigInt::zero()
        } else {
            coeffs[i as usize].clone()
        }
    }

    /// Nonzero terms `(exponent, coefficient)` in ascending order, exponents
    /// in units of `1/root()`.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i64, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// The dense representation over a root order that is a multiple of
    /// `root()`.
    pub(crate) fn dense_at(&self, r: u32) -> (i64, Cow<'_, [BigInt]>) {
        if r == self.root || self.coeffs.is_empty() {
            return (self.low * (r / self.root) as i64, Cow::Borrowed(&self.coeffs));
        }
        debug_assert!(r % self.root == 0);
        let f = (r / self.root) as usize;
        let mut out = vec![BigInt::zero(); (self.coeffs.len() - 1) * f + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i * f] = c.clone();
        }
        (self.low * f as i64, Cow::Owned(out))
    }

    /// The bar involution `q -> q^{-1}`.
    pub fn bar(&self) -> Self {
        match self.max_exp() {
            None => self.clone(),
            Some(hi) => {
                let mut coeffs = self.coeffs.clone();
                coeffs.reverse();
                Self { root: self.root, low: -hi, coeffs }
            }
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { root: self.root, low: self.low, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Gcd of the coefficients (nonnegative; zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`
    /// in `Z[u, u^{-1}]`.
    pub fn div_exact(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        assert!(!d.is_zero(), "division by the zero Laurent polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let r = lcm(self.root, d.root);
        let (al, a) = self.dense_at(r);
        let (bl, b) = d.dense_at(r);
        let q = poly_div_exact(&a, &b)?;
        Some(Self::from_dense(r, al - bl, q))
    }

    /// Evaluates at `u = u0` where `u = q^(1/root)`. Returns `None` if
    /// `u0 = 0` and a negative exponent is present.
    pub fn eval(&self, root: u32, u0: &BigRational) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        assert!(root % self.root == 0, "value needs root order {}, evaluated at root {}", self.root, root);
        let (low, coeffs) = self.dense_at(root);
        if u0.is_zero() {
            return if low < 0 { None } else { Some(BigRational::from_integer(self.coeff_at(1, 0))) };
        }
        let mut acc = BigRational::zero();
        for c in coeffs.iter().rev() {
            acc = acc * u0 + BigRational::from_integer(c.clone());
        }
        Some(acc * rational_pow(u0, low))
    }
}

pub(crate) fn lcm(a: u32, b: u32) -> u32 {
    a / a.gcd(&b) * b
}

pub(crate) fn rational_pow(x: &BigRational, e: i64) -> BigRational {
    let mut base = if e < 0 { x.recip() } else { x.clone() };
    let mut e = e.unsigned_abs();
    let mut acc = BigRational::one();
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        base = &base * &base;
        e >>= 1;
    }
    acc
}

/// Exact division of dense polynomials (index = degree); `None` if the
/// remainder is nonzero or a quotient coefficient is not integral.
pub(crate) fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Option<Vec<BigInt>> {
    if num.is_empty() {
        return Some(Vec::new());
    }
    if den.len() > num.len() {
        return None;
    }
    let mut rem: Vec<BigInt> = num.to_vec();
    let dl = den.len();
    let lead = &den[dl - 1];
    let mut quot = vec![BigInt::zero(); num.len() - dl + 1];
    for i in (0..quot.len()).rev() {
        let top = &rem[i + dl - 1];
        if top.is_zero() {
            continue;
        }
        let (qc, r) = top.div_rem(lead);
        if !r.is_zero() {
            return None;
        }
        for (j, dc) in den.iter().enumerate() {
            if !dc.is_zero() {
                rem[i + j] -= &qc * dc;
            }
        }
        quot[i] = qc;
    }
    rem.iter().all(|c| c.is_zero()).then_some(quot)
}

/// Pseudo-remainder of dense polynomials.
fn poly_prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let bl = b.len();
    let lead = &b[bl - 1];
    while r.len() >= bl {
        let top = r[r.len() - 1].clone();
        let shift = r.len() - bl;
        for c in r.iter_mut() {
            *c *= lead;
        }
        for (j, bc) in b.iter().enumerate() {
            r[shift + j] -= &top * bc;
        }
        while r.last().map_or(false, |c| c.is_zero()) {
            r.pop();
        }
    }
    r
}

fn primitive_part(p: &[BigInt]) -> Vec<BigInt> {
    let g = p.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if g.is_zero() || g.is_one() {
        return p.to_vec();
    }
    p.iter().map(|c| c / &g).collect()
}

/// Greatest common divisor in `Z[u]` of two nonzero dense polynomials,
/// normalized to a positive leading coefficient.
pub(crate) fn poly_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let ca = a.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    let cb = b.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    let content = ca.gcd(&cb);
    let (mut x, mut y) = if a.len() >= b.len() {
        (primitive_part(a), primitive_part(b))
    } else {
        (primitive_part(b), primitive_part(a))
    };
    while !y.is_empty() {
        if y.len() == 1 {
            x = vec![BigInt::one()];
            break;
        }
        let r = poly_prem(&x, &y);
        x = y;
        y = primitive_part(&r);
    }
    let mut g: Vec<BigInt> = x.into_iter().map(|c| c * &content).collect();
    if g.last().map_or(false, |c| c.is_negative()) {
        for c in g.iter_mut() {
            *c = -&*c;
        }
    }
    g
}

impl Zero for LaurentPoly {
    fn zero() -> Self {
        Self { root: 1, low: 0, coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        Self { root: 1, low: 0, coeffs: vec![BigInt::one()] }
    }
    fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

fn add_dense(a: &LaurentPoly, b: &LaurentPoly, negate_b: bool) -> LaurentPoly {
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return if negate_b { -b } else { b.clone() };
    }
    let r = lcm(a.root, b.root);
    let (al, ac) = a.dense_at(r);
    let (bl, bc) = b.dense_at(r);
    let lo = al.min(bl);
    let hi = (al + ac.len() as i64).max(bl + bc.len() as i64);
    let mut coeffs = vec![BigInt::zero(); (hi - lo) as usize];
    for (i, c) in ac.iter().enumerate() {
        coeffs[(al - lo) as usize + i] += c;
    }
    for (i, c) in bc.iter().enumerate() {
        let slot = &mut coeffs[(bl - lo) as usize + i];
        if negate_b {
            *slot -= c;
        } else {
            *slot += c;
        }
    }
    LaurentPoly::from_dense(r, lo, coeffs)
}

fn mul_dense(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() || b.is_zero() {
        return LaurentPoly::zero();
    }
    if a.is_one() {
        return b.clone();
    }
    if b.is_one() {
        return a.clone();
    }
    let r = lcm(a.root, b.root);
    let (al, ac) = a.dense_at(r);
    let (bl, bc) = b.dense_at(r);
    let mut coeffs = vec![BigInt::zero(); ac.len() + bc.len() - 1];
    for (i, x) in ac.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in bc.iter().enumerate() {
            if !y.is_zero() {
                coeffs[i + j] += x * y;
            }
        }
    }
    LaurentPoly::from_dense(r, al + bl, coeffs)
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        add_dense(self, rhs, false)
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        add_dense(self, rhs, true)
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        mul_dense(self, rhs)
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        add_dense(&self, &rhs, false)
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        add_dense(&self, &rhs, true)
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        mul_dense(&self, &rhs)
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        *self = add_dense(self, rhs, false);
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        *self = add_dense(self, rhs, true);
    }
}

impl MulAssign<&LaurentPoly> for LaurentPoly {
    fn mul_assign(&mut self, rhs: &LaurentPoly) {
        *self = mul_dense(self, rhs);
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.coeffs.iter_mut() {
            *c = -&*c;
        }
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

/// Formats `q^(exp/root)` as `q`, `q^k` or `q^(a/b)`.
pub(crate) fn fmt_q_power(f: &mut fmt::Formatter<'_>, exp: i64, root: u32) -> fmt::Result {
    let g = exp.gcd(&(root as i64));
    let (num, den) = (exp / g, root as i64 / g);
    if den == 1 {
        if num == 1 {
            write!(f, "q")
        } else {
            write!(f, "q^{}", num)
        }
    } else {
        write!(f, "q^({}/{})", num, den)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms().rev().enumerate() {
            let mag = c.abs();
            match (idx, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if e == 0 {
                write!(f, "{}", mag)?;
            } else {
                if !mag.is_one() {
                    write!(f, "{}", mag)?;
                }
                fmt_q_power(f, e, self.root)?;
            }
        }
        Ok(())
    }
}
