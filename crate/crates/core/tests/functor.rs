use glweb::functor::GammaContext;
use glweb::glnmod::intertwiner_check;
use glweb::linalg::Matrix;
use glweb::qalg::{qbinom, qf, qint, LaurentFraction};
use glweb::webcat::build::*;
use glweb::webcat::{CrossDir, Gen, Orient, Sense, Strand, WebExpr, WebObject};

fn g(x: Gen) -> WebExpr {
    WebExpr::gen(x)
}

fn id(s: &[Strand]) -> WebExpr {
    WebExpr::id(&WebObject::new(s.iter().copied()))
}

fn up1() -> WebExpr {
    id(&[Strand::up(1)])
}

fn down1() -> WebExpr {
    id(&[Strand::down(1)])
}

fn gm(ctx: &GammaContext, w: &WebExpr) -> Matrix<LaurentFraction> {
    ctx.expr(w).unwrap()
}

fn assert_same(ctx: &GammaContext, a: &WebExpr, b: &WebExpr) {
    let (x, y) = (gm(ctx, a), gm(ctx, b));
    assert_eq!(x.first_difference(&y), None, "n={}: {} vs {}", ctx.n, a, b);
}

fn all_gens(max_k: usize) -> Vec<Gen> {
    let mut v = vec![Gen::CupL, Gen::CapL, Gen::CupR, Gen::CapR, Gen::GreenDumbbell];
    for d in [CrossDir::Up, CrossDir::Down, CrossDir::Left, CrossDir::Right] {
        for s in [Sense::Over, Sense::Under] {
            v.push(Gen::Cross(d, s));
        }
    }
    for k in 1..max_k {
        v.extend([Gen::MergeUp(k), Gen::SplitUp(k), Gen::MergeDown(k), Gen::SplitDown(k)]);
    }
    v
}

#[test]
fn standard_merge_and_split_values() {
    let ctx = GammaContext::new(2);
    let m = ctx.generator(Gen::MergeUp(1));
    // m(b_2 (x) b_1) = q y_(1,2): column 1*2+0 = 2, row of (1,2) = 1
    assert_eq!(m.get(1, 2).to_string(), "q");
    let s = ctx.generator(Gen::SplitUp(1));
    assert_eq!(s.get(0, 0), qint(2));
}

#[test]
fn every_generator_is_an_intertwiner() {
    for n in 1..=3 {
        let ctx = GammaContext::new(n);
        for gen in all_gens(4) {
            let d = ctx.space(&WebObject::new(gen.dom()));
            let c = ctx.space(&WebObject::new(gen.cod()));
            let r = intertwiner_check(&d, &c, &ctx.generator(gen));
            assert!(r.passed(), "n={} {:?}: {}", n, gen, r);
        }
    }
}

#[test]
fn circles_both_orientations() {
    for n in 1..=5 {
        let ctx = GammaContext::new(n);
        let ccw = g(Gen::CapR).compose(&g(Gen::CupL)).unwrap();
        let cw = g(Gen::CapL).compose(&g(Gen::CupR)).unwrap();
        let v = LaurentFraction::from(qint(n as i64));
        assert_eq!(ctx.scalar(&ccw).unwrap(), v);
        assert_eq!(ctx.scalar(&cw).unwrap(), v);
    }
}

#[test]
fn thin_zigzags() {
    for n in 2..=3 {
        let ctx = GammaContext::new(n);
        let z1 = up1().tensor(&g(Gen::CapL)).compose(&g(Gen::CupL).tensor(&up1())).unwrap();
        assert_same(&ctx, &z1, &up1());
        let z2 = g(Gen::CapL).tensor(&down1()).compose(&down1().tensor(&g(Gen::CupL))).unwrap();
        assert_same(&ctx, &z2, &down1());
        let z3 = down1().tensor(&g(Gen::CapR)).compose(&g(Gen::CupR).tensor(&down1())).unwrap();
        assert_same(&ctx, &z3, &down1());
        let z4 = g(Gen::CapR).tensor(&up1()).compose(&up1().tensor(&g(Gen::CupR))).unwrap();
        assert_same(&ctx, &z4, &up1());
    }
}

#[test]
fn rightward_cap_and_cup_match_their_definitions() {
    for n in 2..=4 {
        let ctx = GammaContext::new(n);
        let ni = n as i64;
        let cap = g(Gen::CapL).compose(&g(Gen::Cross(CrossDir::Right, Sense::Under))).unwrap().scale(&qf(ni * ni - 1, n as u32));
        assert_same(&ctx, &cap, &g(Gen::CapR));
        let cup = g(Gen::Cross(CrossDir::Right, Sense::Over)).compose(&g(Gen::CupL)).unwrap().scale(&qf(1 - ni * ni, n as u32));
        assert_same(&ctx, &cup, &g(Gen::CupR));
    }
}

#[test]
fn crossings_expand_as_thin_cross() {
    for n in 2..=3 {
        let ctx = GammaContext::new(n);
        for s in [Sense::Over, Sense::Under] {
            let x = g(Gen::Cross(CrossDir::Up, s));
            for f in [glweb::webcat::Flavor::Symmetric, glweb::webcat::Flavor::Exterior] {
                assert_same(&ctx, &x, &thin_cross(n, s, f));
            }
        }
    }
}

#[test]
fn down_generators_are_rotations() {
    for n in 2..=3 {
        let ctx = GammaContext::new(n);
        for s in [Sense::Over, Sense::Under] {
            assert_same(&ctx, &g(Gen::Cross(CrossDir::Down, s)), &dual(&g(Gen::Cross(CrossDir::Up, s))));
        }
        for k in 1..=2 {
            assert_same(&ctx, &g(Gen::MergeDown(k)), &dual(&split_1k(n, k)));
            assert_same(&ctx, &g(Gen::SplitDown(k)), &dual(&merge_1k(n, k)));
        }
    }
}

#[test]
fn one_k_merges_match_closed_forms() {
    for n in 2..=3 {
        let ctx = GammaContext::new(n);
        for k in 1..=3 {
            let a = gm(&ctx, &merge_1k(n, k));
            assert_eq!(a.first_difference(&ctx.merge_1k_closed(k).to_fraction()), None, "merge n={} k={}", n, k);
            let b = gm(&ctx, &split_1k(n, k));
            assert_eq!(b.first_difference(&ctx.split_1k_closed(k).to_fraction()), None, "split n={} k={}", n, k);
        }
    }
}

#[test]
fn thick_circles_and_digons() {
    for n in 2..=3 {
        let ctx = GammaContext::new(n);
        for k in 1..=3 {
            let v = LaurentFraction::from(qbinom((n + k - 1) as i64, k as u32));
            let ccw = cap_r(k).compose(&cup_l(k)).unwrap();
            let cw = cap_l(k).compose(&cup_r(k)).unwrap();
            assert_eq!(ctx.scalar(&ccw).unwrap(), v, "n={} k={}", n, k);
            assert_eq!(ctx.scalar(&cw).unwrap(), v, "n={} k={}", n, k);
        }
        for (k, l) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
            for o in [Orient::Up, Orient::Down] {
                let d = thick_merge(k, l, o).compose(&thick_split(k, l, o)).unwrap();
                let r = id(&[Strand::new(k + l, o)]).scale(&qbinom((k + l) as i64, l as u32).into());
                assert_same(&ctx, &d, &r);
            }
        }
    }
}

#[test]
fn thick_zigzags() {
    let ctx = GammaContext::new(2);
    for k in 1..=3 {
        let u = id(&[Strand::up(k)]);
        let d = id(&[Strand::down(k)]);
        assert_same(&ctx, &u.tensor(&cap_l(k)).compose(&cup_l(k).tensor(&u)).unwrap(), &u);
        assert_same(&ctx, &cap_l(k).tensor(&d).compose(&d.tensor(&cup_l(k))).unwrap(), &d);
        assert_same(&ctx, &d.tensor(&cap_r(k)).compose(&cup_r(k).tensor(&d)).unwrap(), &d);
        assert_same(&ctx, &cap_r(k).tensor(&u).compose(&u.tensor(&cup_r(k))).unwrap(), &u);
    }
}

#[test]
fn bend_round_trip() {
    let ctx = GammaContext::new(2);
    let w = thick_merge(1, 1, Orient::Up);
    let b = bend(&w);
    assert!(b.dom().is_empty());
    assert_same(&ctx, &unbend(&b, w.dom()).unwrap(), &w);
}
