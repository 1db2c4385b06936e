//! Quantum integers, factorials, binomials and trinomials in `Z[q, q^{-1}]`.

use num_traits::{One, Zero};

use super::LaurentPoly;

/// `[s] = (q^s - q^{-s}) / (q - q^{-1})`, computed by exact division.
pub fn qint(s: i64) -> LaurentPoly {
    if s == 0 {
        return LaurentPoly::zero();
    }
    let num = LaurentPoly::from_terms(1, [(s, 1), (-s, -1)]);
    let den = LaurentPoly::from_terms(1, [(1, 1), (-1, -1)]);
    num.div_exact(&den).expect("q^s - q^-s is divisible by q - q^-1")
}

/// `[t]! = [t][t-1]...[1]`, with `[0]! = 1`.
pub fn qfact(t: u32) -> LaurentPoly {
    (1..=t as i64).fold(LaurentPoly::one(), |acc, i| &acc * &qint(i))
}

fn falling(s: i64, t: u32) -> LaurentPoly {
    (0..t as i64).fold(LaurentPoly::one(), |acc, i| &acc * &qint(s - i))
}

/// The quantum binomial `[s][s-1]...[s-t+1] / [t]!`.
///
/// Panics if the division leaves a remainder, which can only mean an
/// arithmetic bug.
pub fn qbinom(s: i64, t: u32) -> LaurentPoly {
    falling(s, t).div_exact(&qfact(t)).expect("quantum binomial divides exactly")
}

/// The quantum trinomial `[a][a-1]...[a-b-c+1] / ([b]! [c]!)`.
pub fn qtrinom(a: i64, b: u32, c: u32) -> LaurentPoly {
    let den = &qfact(b) * &qfact(c);
    falling(a, b + c).div_exact(&den).expect("quantum trinomial divides exactly")
}
