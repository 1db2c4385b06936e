use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::laurent::{lcm, poly_div_exact, poly_gcd, LaurentPoly};
use crate::Error;

/// An element of the fraction field of `Z[u, u^{-1}]`, kept in canonical
/// form: numerator and denominator share no polynomial factor (content
/// included), and the denominator is an honest polynomial with nonzero
/// constant term and positive leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentFraction {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl LaurentFraction {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_one() {
            return Self { num, den };
        }
        if den.is_monomial() {
            // c u^b: only the content and the shift need care
            let r = lcm(num.root(), den.root());
            let (b, d) = den.dense_at(r);
            let c = &d[0];
            let mut g = num.content().gcd(c);
            if c.is_negative() {
                g = -g;
            }
            let (al, a) = num.dense_at(r);
            let a = a.iter().map(|x| x / &g).collect();
            return Self { num: LaurentPoly::from_dense(r, al - b, a), den: LaurentPoly::from_int(c / &g) };
        }
        let r = lcm(num.root(), den.root());
        let (al, a) = num.dense_at(r);
        let (bl, b) = den.dense_at(r);
        let g = poly_gcd(&a, &b);
        let (mut a, mut b) = if g.len() == 1 && g[0].is_one() {
            (a.into_owned(), b.into_owned())
        } else {
            (
                poly_div_exact(&a, &g).expect("gcd divides numerator"),
                poly_div_exact(&b, &g).expect("gcd divides denominator"),
            )
        };
        if b.last().map_or(false, |c| c.is_negative()) {
            for x in a.iter_mut().chain(b.iter_mut()) {
                *x = -&*x;
            }
        }
        Self { num: LaurentPoly::from_dense(r, al - bl, a), den: LaurentPoly::from_dense(r, 0, b) }
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Self { num: p, den: LaurentPoly::one() }
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(LaurentPoly::from_int(c))
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    /// True iff the value lies in `Z[u, u^{-1}]`.
    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_poly(&self) -> Option<&LaurentPoly> {
        self.is_integral().then_some(&self.num)
    }

    /// Root order needed to express both numerator and denominator.
    pub fn root(&self) -> u32 {
        lcm(self.num.root(), self.den.root())
    }

    pub fn inv(&self) -> Result<Self, Error> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(self.den.clone(), self.num.clone()))
    }

    pub fn bar(&self) -> Self {
        Self::canonical(self.num.bar(), self.den.bar())
    }

    /// Applies `u -> u0` with `u = q^(1/root)`; fails if the denominator
    /// vanishes there.
    pub fn specialize(&self, root: u32, u0: &BigRational) -> Result<BigRational, Error> {
        let d = self.den.eval(root, u0).ok_or(Error::UnluckySpecialization)?;
        if d.is_zero() {
            return Err(Error::UnluckySpecialization);
        }
        let n = self.num.eval(root, u0).ok_or(Error::UnluckySpecialization)?;
        Ok(n / d)
    }
}

impl Zero for LaurentFraction {
    fn zero() -> Self {
        Self { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for LaurentFraction {
    fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }
    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }
}

impl From<LaurentPoly> for LaurentFraction {
    fn from(p: LaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

impl From<i64> for LaurentFraction {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl<'a> Add<&'a LaurentFraction> for &'a LaurentFraction {
    type Output = LaurentFraction;
    fn add(self, rhs: &LaurentFraction) -> LaurentFraction {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            if self.den.is_one() {
                return LaurentFraction::from_poly(num);
            }
            return LaurentFraction::canonical(num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        LaurentFraction::canonical(num, &self.den * &rhs.den)
    }
}

impl<'a> Sub<&'a LaurentFraction> for &'a LaurentFraction {
    type Output = LaurentFraction;
    fn sub(self, rhs: &LaurentFraction) -> LaurentFraction {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a LaurentFraction> for &'a LaurentFraction {
    type Output = LaurentFraction;
    fn mul(self, rhs: &LaurentFraction) -> LaurentFraction {
        if self.is_zero() || rhs.is_zero() {
            return LaurentFraction::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return LaurentFraction::from_poly(&self.num * &rhs.num);
        }
        LaurentFraction::canonical(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl<'a> Div<&'a LaurentFraction> for &'a LaurentFraction {
    type Output = LaurentFraction;
    /// Panics on division by zero; use [`LaurentFraction::inv`] to handle it.
    fn div(self, rhs: &LaurentFraction) -> LaurentFraction {
        self * &rhs.inv().expect("division by zero")
    }
}

impl Add for LaurentFraction {
    type Output = LaurentFraction;
    fn add(self, rhs: LaurentFraction) -> LaurentFraction {
        &self + &rhs
    }
}

impl Sub for LaurentFraction {
    type Output = LaurentFraction;
    fn sub(self, rhs: LaurentFraction) -> LaurentFraction {
        &self - &rhs
    }
}

impl Mul for LaurentFraction {
    type Output = LaurentFraction;
    fn mul(self, rhs: LaurentFraction) -> LaurentFraction {
        &self * &rhs
    }
}

impl Div for LaurentFraction {
    type Output = LaurentFraction;
    fn div(self, rhs: LaurentFraction) -> LaurentFraction {
        &self / &rhs
    }
}

impl Neg for LaurentFraction {
    type Output = LaurentFraction;
    fn neg(self) -> LaurentFraction {
        LaurentFraction { num: -self.num, den: self.den }
    }
}

impl Neg for &LaurentFraction {
    type Output = LaurentFraction;
    fn neg(self) -> LaurentFraction {
        -self.clone()
    }
}

impl fmt::Display for LaurentFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qalg::{qfact, qint};
    use alloc::string::ToString;

    #[test]
    fn inverse_laws() {
        let two = LaurentFraction::from(qint(2));
        assert!((&two.inv().unwrap() * &two).is_one());
        assert!((&two + &(-&two)).is_zero());
        let f3 = LaurentFraction::from(qfact(3));
        assert!((&f3.inv().unwrap() * &f3).is_one());
        assert_eq!(LaurentFraction::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn canonical_denominator_shape() {
        // q^2 / (q^3 + q) = q / (q^2 + 1)
        let x = LaurentFraction::new(LaurentPoly::q_pow(2), LaurentPoly::from_terms(1, [(3, 1), (1, 1)])).unwrap();
        assert_eq!(x.denominator(), &LaurentPoly::from_terms(1, [(2, 1), (0, 1)]));
        assert_eq!(x.numerator(), &LaurentPoly::q_pow(1));
        // -2 / (-4 q) = 1/2 q^-1
        let y = LaurentFraction::new(LaurentPoly::from_int(-2), LaurentPoly::monomial(1, 1, -4)).unwrap();
        assert_eq!(y.to_string(), "(q^-1)/(2)");
        // (q - q^-1)/(q^2 - q^-2) = 1/[2]
        let z = LaurentFraction::new(
            LaurentPoly::from_terms(1, [(1, 1), (-1, -1)]),
            LaurentPoly::from_terms(1, [(2, 1), (-2, -1)]),
        )
        .unwrap();
        assert_eq!(z.to_string(), "(q)/(q^2 + 1)");
        assert_eq!(z, LaurentFraction::from(qint(2)).inv().unwrap());
    }

    #[test]
    fn specialization() {
        let h = LaurentFraction::from(LaurentPoly::q_frac_pow(1, 2));
        assert_eq!(h.specialize(2, &BigRational::from_integer(3.into())), Ok(BigRational::from_integer(3.into())));
        let bad = LaurentFraction::from(qint(2)).inv().unwrap();
        // [2] vanishes at u^2 = -1 only, never at a rational point; 1/(q-1) does at 1
        assert!(bad.specialize(1, &BigRational::one()).is_ok());
        let w = LaurentFraction::new(LaurentPoly::one(), LaurentPoly::from_terms(1, [(1, 1), (0, -1)])).unwrap();
        assert_eq!(w.specialize(1, &BigRational::one()), Err(Error::UnluckySpecialization));
    }
}
