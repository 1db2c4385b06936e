//! Exact arithmetic in `Z[q^(1/N), q^(-1/N)]`, its fraction field, and
//! quantum combinatorics.

mod fraction;
mod laurent;
mod parse;
mod quantum;

pub use fraction::LaurentFraction;
pub use laurent::LaurentPoly;
pub use parse::{parse_fraction, parse_poly};
pub use quantum::{qbinom, qfact, qint, qtrinom};


/// `q^(num/den)` as a fraction-field element.
pub fn qf(num: i64, den: u32) -> LaurentFraction {
    LaurentFraction::from(LaurentPoly::q_frac_pow(num, den))
}
