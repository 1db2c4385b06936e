use glweb::functor::GammaContext;
use glweb::qalg::{qf, qint, LaurentFraction};
use glweb::verify::corpus::random_web;
use glweb::webcat::build::*;
use glweb::webcat::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn g(x: Gen) -> WebExpr {
    WebExpr::gen(x)
}

fn ids(labels: &[usize]) -> WebExpr {
    WebExpr::id(&WebObject::up(labels))
}

fn coeff_of(w: &WebExpr, d: &WebExpr) -> LaurentFraction {
    let (dd, _) = d.terms().next().unwrap();
    w.terms().find(|(x, _)| *x == dd).map(|(_, c)| c.clone()).unwrap_or_else(|| LaurentFraction::from_int(0))
}

#[test]
fn composition_examples() {
    let circle = cap_r(1).compose(&cup_l(1)).unwrap();
    assert!(circle.dom().is_empty() && circle.cod().is_empty());
    assert_eq!(circle.terms().next().unwrap().0.num_generators(), 2);
    assert_eq!(ids(&[3]).compose(&ids(&[3])).unwrap(), ids(&[3]));
    let d = g(Gen::SplitUp(1)).compose(&g(Gen::MergeUp(1))).unwrap();
    assert_eq!(d, dumbbell_thin());
    assert_eq!(*d.dom(), WebObject::up(&[1, 1]));
    match g(Gen::MergeUp(1)).compose(&g(Gen::MergeUp(1))) {
        Err(glweb::Error::BoundaryMismatch { .. }) => {}
        other => panic!("expected a boundary mismatch, got {:?}", other.map(|w| w.to_string())),
    }
}

#[test]
fn zero_labels_are_dropped() {
    assert_eq!(WebObject::up(&[0, 2, 0]), WebObject::up(&[2]));
    assert_eq!(thick_cross_up(0, 2, Sense::Over), ids(&[2]));
    assert_eq!(thick_merge(2, 0, Orient::Up), ids(&[2]));
    assert!(ladder_f(2, 1, 1).is_zero());
    assert!(ladder_e(2, 1, 1).is_zero());
    assert_eq!(ladder_f(0, 1, 2), ids(&[1, 2]));
    assert_eq!(ladder_f(1, 1, 0), ids(&[1]));
}

#[test]
fn thin_cross_coefficients() {
    let d = dumbbell_thin();
    let green = g(Gen::GreenDumbbell);
    for n in 2..=4u32 {
        let m = n as i64;
        let x = thin_cross(n as usize, Sense::Over, Flavor::Symmetric);
        assert_eq!(x.len(), 2);
        assert_eq!(coeff_of(&x, &ids(&[1, 1])), -qf(-m - 1, n));
        assert_eq!(coeff_of(&x, &d), qf(-1, n));
        let x = thin_cross(n as usize, Sense::Under, Flavor::Symmetric);
        assert_eq!(coeff_of(&x, &ids(&[1, 1])), -qf(m + 1, n));
        assert_eq!(coeff_of(&x, &d), qf(1, n));
        let x = thin_cross(n as usize, Sense::Over, Flavor::Exterior);
        assert_eq!(x.flavor, Flavor::Exterior);
        assert_eq!(coeff_of(&x, &ids(&[1, 1])), qf(m - 1, n));
        assert_eq!(coeff_of(&x, &green), -qf(-1, n));
        // both flavors give the same braiding
        let ctx = GammaContext::new(n as usize);
        for s in [Sense::Over, Sense::Under] {
            assert_eq!(
                ctx.expr(&thin_cross(n as usize, s, Flavor::Symmetric)).unwrap(),
                ctx.expr(&thin_cross(n as usize, s, Flavor::Exterior)).unwrap()
            );
        }
    }
}

#[test]
fn thick_builders_reduce_to_generators() {
    assert_eq!(thick_merge(1, 1, Orient::Up), g(Gen::MergeUp(1)));
    assert_eq!(thick_split(1, 1, Orient::Up), g(Gen::SplitUp(1)));
    assert_eq!(thick_merge(1, 1, Orient::Down), g(Gen::MergeDown(1)));
    assert_eq!(cap_l(1), g(Gen::CapL));
    assert_eq!(cup_l(1), g(Gen::CupL));
    assert_eq!(projector(1), ids(&[1]));
    assert_eq!(projector(2), dumbbell_thin().scale(&LaurentFraction::from(qint(2)).inv().unwrap()));
    assert_eq!(merge_1k(3, 0), ids(&[1]));
    let ctx = GammaContext::new(2);
    assert_eq!(ctx.expr(&thick_cross_up(1, 1, Sense::Over)).unwrap(), ctx.expr(&thin_cross(2, Sense::Over, Flavor::Symmetric)).unwrap());
}

#[test]
fn boundaries_follow_the_labels() {
    for k in 0..=3 {
        for l in 0..=3 {
            let m = thick_merge(k, l, Orient::Up);
            assert_eq!((m.dom().clone(), m.cod().clone()), (WebObject::up(&[k, l]), WebObject::up(&[k + l])));
            let s = thick_split(k, l, Orient::Down);
            assert_eq!(*s.dom(), WebObject::new([Strand::down(k + l)]));
            for j in 0..=k {
                let f = ladder_f(j, k, l);
                assert_eq!(*f.cod(), WebObject::up(&[k - j, l + j]));
            }
        }
    }
}

#[test]
fn thick_reidemeister_two() {
    for n in 2..=3 {
        let ctx = GammaContext::new(n);
        for k in 1..=2 {
            for l in 1..=2 {
                let w = thick_cross_up(l, k, Sense::Under).compose(&thick_cross_up(k, l, Sense::Over)).unwrap();
                assert!(ctx.expr(&w).unwrap().is_identity(), "n={} ({},{})", n, k, l);
            }
        }
    }
}

#[test]
fn bend_examples() {
    let ctx = GammaContext::new(3);
    for k in 1..=2 {
        let w = ids(&[k]);
        let back = unbend(&bend(&w), w.dom()).unwrap();
        assert_eq!(ctx.expr(&back).unwrap(), ctx.expr(&w).unwrap());
    }
    assert!(bend(&g(Gen::MergeUp(1))).dom().is_empty());
}

#[test]
fn bend_round_trip_on_random_webs() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let ctx = GammaContext::new(2);
    for _ in 0..50 {
        let d = random_web(&mut rng, 5);
        let w = WebExpr::term(LaurentFraction::from_int(1), d);
        let back = unbend(&bend(&w), w.dom()).unwrap();
        assert_eq!(ctx.expr(&back).unwrap(), ctx.expr(&w).unwrap(), "{}", w);
    }
}

fn end2() -> impl Strategy<Value = WebExpr> {
    let atom = prop_oneof![
        Just(ids(&[1, 1])),
        Just(g(Gen::Cross(CrossDir::Up, Sense::Over))),
        Just(g(Gen::Cross(CrossDir::Up, Sense::Under))),
        Just(dumbbell_thin()),
        Just(g(Gen::GreenDumbbell)),
        (-2i64..=2).prop_map(|c| times(c, &ids(&[1, 1]))),
    ];
    prop::collection::vec(atom, 1..4).prop_map(|ws| compose_all(&ws).unwrap())
}

fn end21() -> impl Strategy<Value = WebExpr> {
    let atom = prop_oneof![
        Just(ids(&[2, 1])),
        Just(thick_split(1, 1, Orient::Up).tensor(&ids(&[1])).compose(&ids(&[2, 1])).unwrap()),
        Just(g(Gen::MergeUp(2)).compose(&ids(&[2, 1])).unwrap()),
    ];
    atom.prop_map(|w| {
        // close every choice back up to 2^ 1^
        match w.cod().len() {
            3 => g(Gen::MergeUp(1)).tensor(&ids(&[1])).compose(&w).unwrap(),
            1 => g(Gen::SplitUp(2)).compose(&w).unwrap(),
            _ => w,
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn interchange_law(f in end2(), h in end2(), gg in end21(), k in end21()) {
        let lhs = f.tensor(&gg).compose(&h.tensor(&k)).unwrap();
        let rhs = f.compose(&h).unwrap().tensor(&gg.compose(&k).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn composition_is_associative(a in end2(), b in end2(), c in end2()) {
        prop_assert_eq!(a.compose(&b).unwrap().compose(&c).unwrap(), a.compose(&b.compose(&c).unwrap()).unwrap());
    }

    #[test]
    fn gamma_is_monoidal(f in end2(), gg in end21()) {
        let ctx = GammaContext::new(2);
        let lhs = ctx.expr(&f.tensor(&gg)).unwrap();
        let rhs = ctx.expr(&f).unwrap().kron(&ctx.expr(&gg).unwrap());
        prop_assert_eq!(lhs, rhs);
    }
}
