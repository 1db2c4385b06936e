use glweb::functor::GammaContext;
use glweb::qalg::{qbinom, qf, qfact, qint, LaurentFraction};
use glweb::verify::catalog::{instances, split_cross_scalar, twist};
use glweb::verify::corpus::random_closed;
use glweb::verify::*;
use glweb::webcat::build::*;
use glweb::webcat::*;
use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn lf(p: glweb::LaurentPoly) -> LaurentFraction {
    LaurentFraction::from(p)
}

fn rid(name: &str, params: &str) -> RelationId {
    RelationId::with_params(name.parse().unwrap(), params).unwrap()
}

fn assert_pass(r: &Report) {
    assert!(r.passed(), "{}", r);
}

#[test]
fn catalog_examples() {
    let r = check(&rid("circle-1", ""), 4);
    assert_pass(&r);
    assert_eq!(r.lhs, qint(4).to_string());
    let r = check(&rid("dumbbell-kl", "k=1,l=2"), 2);
    assert_pass(&r);
    assert!(r.lhs.contains(&qbinom(4, 2).to_string()), "{}", r.lhs);
    assert_pass(&check(&rid("serre-web", "k=2,l=1,m=1"), 2));
    assert_pass(&check(&rid("int-dumcross", "k=1,l=1,r=0"), 2));
    assert_pass(&check(&rid("int-digon", "k=1,l=1"), 2));
    assert_pass(&check(&rid("cross-redundant", "k=2,l=1"), 2));
}

#[test]
fn unknown_relation_ids_are_rejected() {
    assert!(matches!("no-such-rel".parse::<Rel>(), Err(glweb::Error::InvalidArgument(_))));
    assert_eq!(Rel::ALL.len(), 35);
    for &rel in Rel::ALL {
        assert_eq!(rel.name().parse::<Rel>().unwrap(), rel);
    }
}

#[test]
fn whole_catalog_small_labels() {
    for n in 1..=3 {
        for &rel in Rel::ALL {
            for id in instances(rel, 2) {
                let r = check(&id, n);
                assert!(r.passed(), "n={} {}", n, r);
            }
        }
    }
}

#[test]
fn failing_checks_carry_witnesses() {
    let ctx = GammaContext::new(2);
    let a = ctx.expr(&dumbbell_thin()).unwrap();
    let b = ctx.expr(&WebExpr::id(&WebObject::up(&[1, 1]))).unwrap();
    let r = Report::matrices("x", "", &a, &b);
    assert!(!r.passed());
    assert!(r.witness.is_some());
}

#[test]
fn twist_scalars() {
    for n in 2..=3 {
        for k in 1..=2 {
            let kk = k as i64;
            let e = kk * kk * n as i64 - kk * kk + kk * n as i64 * (n as i64 - 1);
            assert_eq!(twist(n, k, Sense::Over), qf(e, n as u32));
            assert_eq!(twist(n, k, Sense::Under), qf(-e, n as u32));
            for l in 1..=2 {
                let e = (k * l) as i64 * (n as i64 - 1);
                assert_eq!(split_cross_scalar(n, k, l, Sense::Over), qf(e, n as u32));
                assert_eq!(split_cross_scalar(n, k, l, Sense::Under), qf(-e, n as u32));
            }
        }
    }
}

#[test]
fn rewrite_examples() {
    for n in 1..=4 {
        let circle = cap_r(1).compose(&cup_l(1)).unwrap();
        assert_eq!(eval_expr_rewrite(&circle, n).unwrap(), lf(qint(n as i64)));
        let b = lf(qbinom(n as i64 + 1, 2));
        let two = lf(qint(2));
        let d = closure(&dumbbell_thin()).unwrap();
        assert_eq!(eval_expr_rewrite(&d, n).unwrap(), two.clone() * two.clone() * b.clone());
        let x = closure(&thick_cross_up(1, 1, Sense::Over)).unwrap();
        assert_eq!(eval_expr_rewrite(&x, n).unwrap(), qf(n as i64 - 1, n as u32) * two * b);
    }
}

#[test]
fn rewrite_errors() {
    assert_eq!(eval_expr_rewrite(&dumbbell_thin(), 2), Err(glweb::Error::NotClosed));
    let thick = cap_r(3).compose(&cup_l(3)).unwrap();
    assert!(matches!(eval_expr_rewrite(&thick, 2), Err(glweb::Error::InvalidArgument(_))));
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let d = loop {
        let d = random_closed(&mut rng, 14);
        if d.generators().any(|g| matches!(g, Gen::Cross(..))) {
            break d;
        }
    };
    assert_eq!(eval_closed_rewrite_with(&d, 2, 0), Err(glweb::Error::Budget));
}

#[test]
fn rewrite_agrees_with_gamma() {
    for n in 2..=3 {
        let ctx = GammaContext::new(n);
        let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
        for _ in 0..200 {
            let d = random_closed(&mut rng, 6);
            let g = ctx.diagram(&d).get(0, 0);
            assert_eq!(eval_closed_rewrite(&d, n).unwrap(), lf(g), "n={} {:?}", n, d);
        }
    }
}

#[test]
fn pairing_examples() {
    for n in 2..=4 {
        assert_eq!(pair(&cup_l(1), &cap_r(1), n).unwrap(), lf(qint(n as i64)));
        let zero = WebExpr::zero(WebObject::empty(), WebObject::up(&[1]).tensor(&WebObject::new([Strand::down(1)])));
        assert!(pair(&zero, &cap_r(1), n).unwrap() == LaurentFraction::from_int(0));
        assert_pass(&pair_report(&cup_l(1), &cap_r(1), n));
    }
    assert!(matches!(pair(&cup_l(1), &cap_l(1), 2), Err(glweb::Error::BoundaryMismatch { .. })));
}

#[test]
fn closures_differ() {
    for n in 2..=4 {
        assert_pass(&closures_report(n));
        let a = pair(&dumbbell_thin(), &closing_web(), n).unwrap();
        let b = pair(&thick_cross_up(1, 1, Sense::Over), &closing_web(), n).unwrap();
        assert_ne!(a, b);
    }
}

#[test]
fn explosion_shape_independence() {
    for n in 2..=3 {
        assert_pass(&explosion_shapes(n));
    }
}

#[test]
fn projectors() {
    for n in 2..=3 {
        for k in 1..=4 {
            assert_pass(&projector_report(k, n));
        }
    }
    for k in 3..=4 {
        assert_pass(&check(&RelationId::new(Rel::JwRecursion, &[k]), 2));
    }
}

fn block(k: usize) -> WebExpr {
    split_tree(k, Orient::Up).compose(&merge_tree(k, Orient::Up)).unwrap()
}

#[test]
fn thin_expressions() {
    let ctx = GammaContext::new(3);
    let d = dumbbell_thin();
    assert_eq!(thin_expression(&d).unwrap(), d);
    assert_eq!(two_dumbbell_count(&d).unwrap(), 1);
    let id = WebExpr::id(&WebObject::up(&[1, 1]));
    assert_eq!(thin_expression(&id).unwrap(), id);
    assert_eq!(two_dumbbell_count(&id).unwrap(), 0);
    // D_3 = [3]! e_3 = -(D * 1) + (D * 1)(1 * D)(D * 1)
    let d1 = d.tensor(&WebExpr::id(&WebObject::up(&[1])));
    let d2 = WebExpr::id(&WebObject::up(&[1])).tensor(&d);
    let long = compose_all(&[d1.clone(), d2, d1.clone()]).unwrap();
    let expect = long.sub(&d1).unwrap();
    let t = thin_expression(&block(3)).unwrap();
    assert_eq!(t, expect);
    assert_eq!(ctx.expr(&t).unwrap(), ctx.expr(&block(3)).unwrap());
    assert_eq!(two_dumbbell_count(&block(3)).unwrap(), 3);
    for k in 1..=4 {
        let t = thin_expression(&block(k)).unwrap();
        assert_eq!(ctx.expr(&t).unwrap(), ctx.expr(&block(k)).unwrap());
        let most = glweb::verify::basis::dumbbells_per_term(&t).into_iter().max().unwrap();
        assert_eq!(two_dumbbell_count(&block(k)).unwrap(), most);
    }
    let two = block(2).tensor(&block(3)).scale(&lf(qint(2)));
    assert_eq!(LocalDumbbell::from_expr(&two).unwrap().blocks, vec![2, 3]);
    assert_eq!(two_dumbbell_count(&two).unwrap(), 4);
    assert_eq!(ctx.expr(&thin_expression(&two).unwrap()).unwrap(), ctx.expr(&two).unwrap());
    let e3 = glweb::verify::basis::projector_thin(3).scale(&lf(qfact(3)));
    assert_eq!(ctx.expr(&e3).unwrap(), ctx.expr(&block(3)).unwrap());
}

#[test]
fn non_local_dumbbells_are_rejected() {
    let bad = [
        thick_cross_up(1, 1, Sense::Over),
        compose_all(&[dumbbell_thin(), thick_cross_up(1, 1, Sense::Over)]).unwrap(),
        WebExpr::gen(Gen::MergeUp(1)),
        cap_r(1).compose(&cup_l(1)).unwrap(),
    ];
    for w in &bad {
        assert!(matches!(thin_expression(w), Err(glweb::Error::NotLocalDumbbell(_))), "{}", w);
    }
}

#[test]
fn colour_change() {
    let d = dumbbell_thin();
    let id = WebExpr::id(&WebObject::up(&[1, 1]));
    let green = WebExpr::gen(Gen::GreenDumbbell);
    let expect = id.scale(&lf(qint(2))).sub(&green).unwrap().with_flavor(Flavor::Exterior);
    let c = color_change(&d);
    assert_eq!(c, expect);
    assert_eq!(c.flavor, Flavor::Exterior);
    assert_eq!(color_change(&id), id.clone().with_flavor(Flavor::Exterior));
    assert_eq!(color_change(&color_change(&id)), id);
    let ctx = GammaContext::new(2);
    for k in 2..=4 {
        let t = thin_expression(&block(k)).unwrap();
        let c = color_change(&t);
        assert_eq!(color_change(&c), t);
        assert_eq!(ctx.expr(&c).unwrap(), ctx.expr(&t).unwrap());
    }
}

#[test]
fn ranks_of_small_spans() {
    let pts: Vec<BigRational> = [(3, 2), (5, 3), (2, 1)].iter().map(|&(a, b)| BigRational::new(a.into(), b.into())).collect();
    assert_eq!(rank_of_span(&thin_span(2), 2, &pts[0]), Ok(2));
    assert_eq!(rank_of_span(&thin_span(1), 2, &pts[0]), Ok(1));
    assert_eq!(rank_of_span(&thin_span(3), 2, &pts[0]), Ok(5));
    for k in 1..=3 {
        assert_pass(&independence_report(&thin_span(k), 2, &pts));
    }
    // a dependent set is caught
    let mut dep = thin_span(2);
    dep.push(dep[1].add(&dep[0]).unwrap());
    assert_eq!(rank_of_span(&dep, 2, &pts[0]), Ok(2));
    assert!(!independence_report(&dep, 2, &pts).passed());
    let mixed = [dumbbell_thin(), WebExpr::id(&WebObject::up(&[2]))];
    assert!(matches!(rank_of_span(&mixed, 2, &pts[0]), Err(glweb::Error::BoundaryMismatch { .. })));
}

#[test]
fn integral_suite() {
    for n in 2..=3 {
        assert_pass(&int_suite(n));
    }
}
