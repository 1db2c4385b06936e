use glweb::qalg::*;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn p(s: &str) -> LaurentPoly {
    s.parse().unwrap()
}

fn rat(a: i64, b: i64) -> BigRational {
    BigRational::new(a.into(), b.into())
}

// q^{s-1} + q^{s-3} + ... + q^{1-s}, negated for s < 0
fn qint_by_sum(s: i64) -> LaurentPoly {
    let m = s.abs();
    let sum = LaurentPoly::from_terms(1, (0..m).map(|i| (m - 1 - 2 * i, 1)));
    if s < 0 {
        -sum
    } else {
        sum
    }
}

fn binom(s: u64, t: u64) -> BigInt {
    (0..t).fold(BigInt::from(1), |acc, i| acc * BigInt::from(s - i) / BigInt::from(i + 1))
}

#[test]
fn quantum_integer_examples() {
    assert_eq!(qint(2).to_string(), "q + q^-1");
    assert_eq!(qint(0), LaurentPoly::from_int(0));
    assert_eq!(qint(-3), -p("q^2 + 1 + q^-2"));
    for s in -12..=12 {
        assert_eq!(qint(s), qint_by_sum(s), "s={}", s);
    }
}

#[test]
fn factorial_and_binomial_examples() {
    assert_eq!(qfact(0), LaurentPoly::from_int(1));
    assert_eq!(qfact(2), qint(2));
    assert_eq!(qfact(3), qint(3) * qint(2));
    assert_eq!(qbinom(7, 0), LaurentPoly::from_int(1));
    assert_eq!(qbinom(3, 2), p("q^2 + 1 + q^-2"));
    assert_eq!(qbinom(1, 2), LaurentPoly::from_int(0));
    assert_eq!(qtrinom(5, 0, 0), LaurentPoly::from_int(1));
    assert_eq!(qtrinom(2, 1, 1), qint(2));
    assert_eq!(qtrinom(1, 1, 1), LaurentPoly::from_int(0));
}

#[test]
fn fraction_examples() {
    let two = LaurentFraction::from(qint(2));
    assert_eq!(two.inv().unwrap() * two.clone(), LaurentFraction::from_int(1));
    assert_eq!(two.clone() + (-two.clone()), LaurentFraction::from_int(0));
    let f3 = LaurentFraction::from(qfact(3));
    assert_eq!(f3.inv().unwrap() * f3, LaurentFraction::from_int(1));
    assert!(LaurentFraction::from_int(0).inv().is_err());
    assert!(two.is_integral());
    assert!(!two.inv().unwrap().is_integral());
    assert!(LaurentFraction::from(qbinom(5, 2)).is_integral());
}

#[test]
fn specialization_examples() {
    let two = LaurentFraction::from(qint(2));
    assert_eq!(two.specialize(1, &rat(1, 1)).unwrap(), rat(2, 1));
    assert_eq!(qf(1, 2).specialize(2, &rat(3, 1)).unwrap(), rat(3, 1));
    assert_eq!(LaurentFraction::from(qbinom(3, 2)).specialize(1, &rat(2, 1)).unwrap(), rat(21, 4));
    // [2] / (q - 1) has a pole at q = 1
    let x = two / LaurentFraction::from(p("q - 1"));
    assert_eq!(x.specialize(1, &rat(1, 1)), Err(glweb::Error::UnluckySpecialization));
}

#[test]
fn scalar_format() {
    assert_eq!(p("q^2 + 1 + q^-2").to_string(), "q^2 + 1 + q^-2");
    assert_eq!((LaurentPoly::q_frac_pow(1, 2) - LaurentPoly::from_int(2)).to_string(), "q^(1/2) - 2");
    let f = LaurentFraction::from_int(1) / LaurentFraction::from(qint(2));
    assert_eq!(f.to_string(), "(q)/(q^2 + 1)");
    assert_eq!(f.to_string().parse::<LaurentFraction>().unwrap(), f);
}

#[test]
fn classical_limit_of_binomials() {
    for s in 0..=10u64 {
        for t in 0..=s {
            let v = LaurentFraction::from(qbinom(s as i64, t as u32)).specialize(1, &rat(1, 1)).unwrap();
            assert_eq!(v, BigRational::from_integer(binom(s, t)), "({}, {})", s, t);
        }
    }
}

#[test]
fn bar_invariance_and_antisymmetry() {
    for s in -8..=8 {
        assert_eq!(qint(s).bar(), qint(s));
        for t in 0..=8 {
            assert_eq!(qbinom(s, t).bar(), qbinom(s, t));
        }
    }
    for t in 0..=8 {
        assert_eq!(qfact(t).bar(), qfact(t));
    }
    for a in -8..=8 {
        for b in 0..=4 {
            for c in 0..=4 {
                assert_eq!(qtrinom(a, b, c).bar(), qtrinom(a, b, c));
            }
        }
    }
    for s in -20..=20 {
        assert_eq!(qint(-s), -qint(s));
    }
}

fn poly(root: u32) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-6i64..=6, -4i64..=4), 0..4).prop_map(move |ts| LaurentPoly::from_terms(root, ts))
}

fn fraction() -> impl Strategy<Value = LaurentFraction> {
    (poly(2), poly(2)).prop_filter_map("nonzero denominator", |(a, b)| LaurentFraction::new(a, b).ok())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn specialization_is_a_ring_map(x in fraction(), y in fraction(), a in 2i64..7, b in 1i64..5) {
        let u0 = rat(a, b);
        if let (Ok(sx), Ok(sy)) = (x.specialize(2, &u0), y.specialize(2, &u0)) {
            prop_assert_eq!((x.clone() + y.clone()).specialize(2, &u0).unwrap(), &sx + &sy);
            prop_assert_eq!((x * y).specialize(2, &u0).unwrap(), sx * sy);
        }
    }

    #[test]
    fn canonical_form_is_idempotent(x in fraction()) {
        let again = LaurentFraction::new(x.numerator().clone(), x.denominator().clone()).unwrap();
        prop_assert_eq!(&again, &x);
        prop_assert_eq!(x.denominator().min_exp(), Some(0));
    }

    #[test]
    fn field_laws(x in fraction(), y in fraction(), z in fraction()) {
        prop_assert_eq!((x.clone() + y.clone()) * z.clone(), x.clone() * z.clone() + y.clone() * z.clone());
        prop_assert_eq!(x.clone() - x.clone(), LaurentFraction::from_int(0));
        if let Ok(i) = x.inv() {
            prop_assert_eq!(x * i, LaurentFraction::from_int(1));
        }
    }

    #[test]
    fn display_round_trips(x in fraction()) {
        prop_assert_eq!(x.to_string().parse::<LaurentFraction>().unwrap(), x);
    }
}
