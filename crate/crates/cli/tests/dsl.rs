use std::process::Command;

use glweb::dotu::Kind;
use glweb::functor::GammaContext;
use glweb::qalg::{qint, LaurentPoly};
use glweb::webcat::build::*;
use glweb::webcat::{Flavor, Gen, Orient, Sense, Strand, WebExpr, WebObject};
use glweb_cli::dsl::*;
use proptest::prelude::*;

fn opts(n: usize) -> Elab {
    Elab { n, flavor: Flavor::Symmetric }
}

fn web2(text: &str) -> WebExpr {
    web(text, &opts(2)).unwrap_or_else(|e| panic!("{}: {}", text, e))
}

#[test]
fn documented_examples() {
    assert_eq!(web2("m(1,1^) . (id(1^) * id(1^))"), WebExpr::gen(Gen::MergeUp(1)));
    assert_eq!(web2("Fl(1,1)@[2,1]"), ladder_f(1, 2, 1));
    for n in 2..=4 {
        let ctx = GammaContext::new(n);
        // counterclockwise and clockwise circles
        for text in ["capL . cupR", "capR . cupL"] {
            let w = web(text, &opts(n)).unwrap();
            assert_eq!(ctx.scalar(&w).unwrap(), qint(n as i64).into());
        }
    }
}

#[test]
fn composition_reads_bottom_up() {
    // g . f: f first
    assert_eq!(web2("s(1,1^) . m(1,1^)"), dumbbell_thin());
    assert!(matches!(web(&"m(1,1^) . m(1,1^)", &opts(2)), Err(DslError { .. })));
}

#[test]
fn generators_and_extensions() {
    assert_eq!(web2("xo(2,1)"), thick_cross_up(2, 1, Sense::Over));
    assert_eq!(web2("xl(1,2)"), thick_cross(Strand::down(1), Strand::up(2), Sense::Over));
    assert_eq!(web2("xru(2,1)"), thick_cross(Strand::up(2), Strand::down(1), Sense::Under));
    assert_eq!(web2("xdo(1,1)"), thick_cross(Strand::down(1), Strand::down(1), Sense::Over));
    assert_eq!(web2("cupL(2)"), cup_l(2));
    assert_eq!(web2("capR"), cap_r(1));
    assert_eq!(web2("ek(3)"), projector(3));
    assert_eq!(web2("gd"), WebExpr::gen(Gen::GreenDumbbell));
    assert_eq!(web2("s(2,1v)"), thick_split(2, 1, Orient::Down));
    let d = dumbbell_thin();
    let id = WebExpr::id(&WebObject::up(&[1, 1]));
    assert_eq!(web2("[q + q^-1] id(1^) * id(1^) - s(1,1^) . m(1,1^)"), id.scale(&qint(2).into()).sub(&d).unwrap());
    assert_eq!(web2("-gd"), WebExpr::gen(Gen::GreenDumbbell).scale(&(-LaurentPoly::from_int(1)).into()));
    let x = web("xo(1,1)", &Elab { n: 3, flavor: Flavor::Exterior }).unwrap();
    assert_eq!(x, thin_cross(3, Sense::Over, Flavor::Exterior));
    // ladder words compose letter by letter
    let ast = parse("El(1,1)@[1,2] . Fl(1,1)@[2,1]").unwrap();
    match elaborate(&ast, &opts(2)).unwrap() {
        Value::Dot(w) => {
            assert_eq!(w.letters.len(), 2);
            assert_eq!(w.letters[0].kind, Kind::E);
        }
        other => panic!("expected a word, got {:?}", other),
    }
    assert_eq!(parse_object("1^ * 2v").unwrap(), WebObject::new([Strand::up(1), Strand::down(2)]));
    assert_eq!(parse_object("").unwrap(), WebObject::empty());
}

#[test]
fn errors_carry_positions() {
    let e = parse("m(1,1^) .\n  (id(1^) * foo)").unwrap_err();
    assert_eq!((e.line, e.col), (2, 13));
    assert!(e.msg.contains("foo"), "{}", e);
    let e = parse("m(1,1x)").unwrap_err();
    assert_eq!((e.line, e.col), (1, 6));
    let e = parse("(cupL").unwrap_err();
    assert!(e.to_string().starts_with("line 1, column 6:"), "{}", e);
    let e = parse("cupL )").unwrap_err();
    assert_eq!(e.col, 6);
    let e = parse("[q^] cupL").unwrap_err();
    assert!(e.msg.contains("scalar"), "{}", e);
    // orientation mismatches surface at elaboration
    let e = web("m(1,1^) . (id(1v) * id(1^))", &opts(2)).unwrap_err();
    assert_eq!(e.col, 1);
    assert!(web("Fl(3,1)@[1,1]", &opts(2)).is_err());
}

#[test]
fn constructor_outputs_round_trip() {
    let ctx = GammaContext::new(3);
    let ws = [
        dumbbell_thin(),
        thick_cross_up(2, 1, Sense::Under),
        thick_cross(Strand::down(1), Strand::up(2), Sense::Over),
        thin_cross(3, Sense::Over, Flavor::Symmetric),
        thin_cross(3, Sense::Under, Flavor::Exterior),
        cap_l(1).compose(&cup_r(1)).unwrap(),
        ladder_f(1, 2, 1),
        thick_merge(2, 1, Orient::Down),
        WebExpr::zero(WebObject::up(&[1]), WebObject::up(&[1])),
    ];
    let mut expressible = 0;
    for w in &ws {
        // explosions of thick strands carry 1/[k]! and have no program
        if !w.has_integral_coefficients() {
            assert!(from_expr(w).is_none());
            continue;
        }
        expressible += 1;
        let ast = from_expr(w).unwrap();
        let back = web(&render(&ast), &opts(3)).unwrap();
        assert_eq!(back.clone().with_flavor(w.flavor), *w, "{}", render(&ast));
        assert_eq!(ctx.expr(&back).unwrap(), ctx.expr(w).unwrap());
    }
    assert!(expressible >= 5, "{}", expressible);
    assert!(from_expr(&cap_l(2)).is_none());
}

fn atom() -> impl Strategy<Value = Atom> {
    let d = prop_oneof![Just(Orient::Up), Just(Orient::Down)];
    let c = prop_oneof![
        Just(Cross::Xo),
        Just(Cross::Xu),
        Just(Cross::Xl),
        Just(Cross::Xlu),
        Just(Cross::Xr),
        Just(Cross::Xru),
        Just(Cross::Xdo),
        Just(Cross::Xdu)
    ];
    prop_oneof![
        (0usize..4, d.clone()).prop_map(|(k, o)| Atom::Id(k, o)),
        (1usize..4, 1usize..4, d.clone()).prop_map(|(k, l, o)| Atom::Merge(k, l, o)),
        (1usize..4, 1usize..4, d).prop_map(|(k, l, o)| Atom::Split(k, l, o)),
        (any::<bool>(), 1usize..3).prop_map(|(right, label)| Atom::Cup { right, label }),
        (any::<bool>(), 1usize..3).prop_map(|(right, label)| Atom::Cap { right, label }),
        (c, 1usize..3, 1usize..3).prop_map(|(c, k, l)| Atom::Cross(c, k, l)),
        Just(Atom::Green),
        (1usize..5).prop_map(Atom::Projector),
        (any::<bool>(), 1usize..3, 0usize..3, prop::collection::vec(-2i64..4, 2..4)).prop_map(|(e, i, power, weight)| Atom::Ladder {
            kind: if e { Kind::E } else { Kind::F },
            i,
            power,
            weight
        }),
    ]
}

fn scalar() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-4i64..=4, -3i64..=3), 0..3).prop_map(|ts| LaurentPoly::from_terms(2, ts))
}

fn ast() -> impl Strategy<Value = Ast> {
    atom().prop_map(|a| Ast::new(Node::Atom(a))).prop_recursive(4, 24, 3, |inner| {
        prop_oneof![
            prop::collection::vec(inner.clone(), 2..4).prop_map(|v| Ast::new(Node::Compose(v))),
            prop::collection::vec(inner.clone(), 2..4).prop_map(|v| Ast::new(Node::Tensor(v))),
            (scalar(), inner.clone()).prop_map(|(c, a)| Ast::new(Node::Scaled(c, Box::new(a)))),
            prop::collection::vec((any::<bool>(), inner), 1..4)
                .prop_filter("a lone positive term is not a sum", |v| v.len() > 1 || v[0].0)
                .prop_map(|v| Ast::new(Node::Sum(v))),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn render_then_parse_is_identity(a in ast()) {
        let text = render(&a);
        let back = parse(&text).map_err(|e| TestCaseError::fail(format!("{}: {}", text, e)))?;
        prop_assert_eq!(back, a, "{}", text);
    }
}

fn glweb(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_glweb")).args(args).output().unwrap();
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

#[test]
fn command_line() {
    let (code, out, _) = glweb(&["eval", "--n", "2", "-e", "capR . cupL"]);
    assert_eq!((code, out.trim()), (0, "q + q^-1"));
    let (code, out, _) = glweb(&["homdim", "--n", "2", "1^ * 1^ * 1^"]);
    assert_eq!((code, out.trim()), (0, "5"));
    let (code, out, _) = glweb(&["check", "--n", "2", "dumbbell-kl", "--params", "k=1,l=1"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("pass dumbbell-kl"), "{}", out);
    let (code, _, err) = glweb(&["check", "--n", "2", "no-such-relation"]);
    assert_eq!(code, 2);
    assert!(err.contains("unknown relation id"), "{}", err);
    let (code, _, err) = glweb(&["eval", "--n", "2", "-e", "m(1,1^)"]);
    assert_eq!(code, 2);
    assert!(err.contains("not closed"), "{}", err);
    let (code, _, err) = glweb(&["eval", "--n", "2", "-e", "capL . cupL"]);
    assert_eq!(code, 2);
    assert!(err.contains("boundary mismatch"), "{}", err);
    let (code, _, err) = glweb(&["eval", "--n", "2", "--mode", "integral", "-e", "capR(2) . cupL(2)"]);
    assert_eq!((code, err.is_empty()), (0, true), "{}", err);

    let (code, out, _) = glweb(&["matrix", "--n", "2", "m(1,1^)"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["domain"].as_array().unwrap().len(), 2);
    assert_eq!(v["codomain"][0]["kind"], "Sym");
    assert_eq!(v["codomain"][0]["degree"], 2);
    assert_eq!(v["entries"].as_array().unwrap().len(), 4);

    let dir = env!("CARGO_TARGET_TMPDIR");
    let path = format!("{}/span.txt", dir);
    std::fs::write(&path, "# End(1^ * 1^)\nid(1^) * id(1^)\ns(1,1^) . m(1,1^)\n[2] s(1,1^) . m(1,1^) - id(1^) * id(1^)\n").unwrap();
    let (code, out, _) = glweb(&["rank", "--n", "2", "--at", "3/2", &path]);
    assert_eq!((code, out.trim()), (0, "2"));

    let (code, out, err) = glweb(&["suite", "--n", "1", "--jobs", "2"]);
    assert_eq!(code, 0, "{}", err);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["criteria"].as_array().unwrap().len(), 13);
}
