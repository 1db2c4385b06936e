use glweb::dotu::*;
use glweb::functor::GammaContext;
use glweb::webcat::build::ladder_f;
use glweb::webcat::{WebExpr, WebObject};

fn k(v: &[i64]) -> GlmWeight {
    GlmWeight::new(v)
}

#[test]
fn empty_word_is_identity() {
    let w = DotWord::new(k(&[2, 1]), vec![]);
    assert_eq!(a_mn(&w), WebExpr::id(&WebObject::up(&[2, 1])));
}

#[test]
fn single_f_is_the_ladder() {
    let w = DotWord::new(k(&[2, 1]), vec![Letter::f(1, 1)]);
    assert_eq!(w.target(), k(&[1, 2]));
    assert_eq!(a_mn(&w), ladder_f(1, 2, 1));
}

#[test]
fn zero_edges_are_erased() {
    let w = DotWord::new(k(&[0, 1]), vec![Letter::e(1, 1)]);
    let web = a_mn(&w);
    assert_eq!(web.dom(), &WebObject::up(&[1]));
    assert_eq!(web.cod(), &WebObject::up(&[1]));
    let ctx = GammaContext::new(2);
    assert!(ctx.expr(&web).unwrap().is_identity());
}

#[test]
fn negative_weights_give_zero() {
    let w = DotWord::new(k(&[0, 1]), vec![Letter::f(1, 1)]);
    assert!(a_mn(&w).is_zero());
}

#[test]
fn ladder_examples() {
    let ctx = GammaContext::new(2);
    let r = check_dot_relation(&DotRelation::DividedPowers { kind: Kind::F, i: 1, j1: 1, j2: 1 }, &k(&[2, 0]), &ctx);
    assert!(r.passed(), "{}", r);
    let r = check_dot_relation(&DotRelation::SquareSwitch { kind: Kind::E, i: 1, j1: 1, j2: 1 }, &k(&[1, 1]), &ctx);
    assert!(r.passed(), "{}", r);
    let r = check_dot_relation(
        &DotRelation::FarCommute { kind: Kind::F, a: 1, j1: 1, b: 3, j2: 1 },
        &k(&[1, 1, 1, 1]),
        &ctx,
    );
    assert!(r.passed(), "{}", r);
}

#[test]
fn all_families_two_strands() {
    for n in 1..=3 {
        let ctx = GammaContext::new(n);
        for w in weights(2, 3) {
            for rel in relation_instances(2, 2) {
                let r = check_dot_relation(&rel, &w, &ctx);
                assert!(r.passed(), "{}", r);
            }
        }
    }
}

#[test]
fn wrong_binomial_weight_is_caught() {
    // the square switch fails if the binomial is dropped
    let ctx = GammaContext::new(2);
    let base = k(&[2, 0]);
    let (lhs, _) = DotRelation::SquareSwitch { kind: Kind::E, i: 1, j1: 1, j2: 1 }.sides(&base);
    let l = ctx.expr(&a_mn(&lhs[0].1)).unwrap();
    let fe = ctx.expr(&a_mn(&DotWord::new(base, vec![Letter::f(1, 1), Letter::e(1, 1)]))).unwrap();
    assert!(l.first_difference(&fe).is_some());
}
