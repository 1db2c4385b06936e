//! The web expression language.
//!
//! ```text
//! program := sum
//! sum     := ["-"] expr { ("+" | "-") expr }
//! expr    := tens { "." tens }        g . f puts g on top of f
//! tens    := atom { "*" atom }
//! atom    := gen | "(" sum ")" | "[" laurent "]" atom
//! ```
//!
//! Generators: `id(k^)`, `m(k,l^)`, `s(k,l^)`, `cupL`, `capL`, `cupR`,
//! `capR` (optionally with a label, `cupL(2)`), the crossings `xo`, `xu`,
//! `xl`, `xr`, `xlu`, `xru`, `xdo`, `xdu` taking `(k,l)`, the green
//! dumbbell `gd`, projectors `ek(k)` and ladder letters `Fl(i,j)@[..]`,
//! `El(i,j)@[..]`.

use std::fmt;

use glweb::dotu::{a_mn, DotWord, GlmWeight, Kind, Letter};
use glweb::qalg::{parse_poly, LaurentFraction, LaurentPoly};
use glweb::webcat::build::*;
use glweb::webcat::{tensor_all, CrossDir, Diagram, Flavor, Gen, Orient, Sense, Strand, WebExpr, WebObject};

#[derive(Clone, Copy, Debug, Default)]
pub struct Span {
    pub start: usize,
    pub end: usize,
    pub line: usize,
    pub col: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DslError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl DslError {
    fn at(span: Span, msg: impl Into<String>) -> Self {
        DslError { line: span.line, col: span.col, msg: msg.into() }
    }
}

impl fmt::Display for DslError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.col, self.msg)
    }
}

impl std::error::Error for DslError {}

/// The crossing spellings: upward over/under, leftward, rightward and
/// downward.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cross {
    Xo,
    Xu,
    Xl,
    Xlu,
    Xr,
    Xru,
    Xdo,
    Xdu,
}

const CROSSES: [(Cross, &str); 8] = [
    (Cross::Xo, "xo"),
    (Cross::Xu, "xu"),
    (Cross::Xl, "xl"),
    (Cross::Xlu, "xlu"),
    (Cross::Xr, "xr"),
    (Cross::Xru, "xru"),
    (Cross::Xdo, "xdo"),
    (Cross::Xdu, "xdu"),
];

impl Cross {
    fn name(self) -> &'static str {
        CROSSES.iter().find(|(c, _)| *c == self).unwrap().1
    }

    /// Orientations of the left and right strand at the bottom, and the sense.
    fn shape(self) -> (Orient, Orient, Sense) {
        use Orient::*;
        match self {
            Cross::Xo => (Up, Up, Sense::Over),
            Cross::Xu => (Up, Up, Sense::Under),
            Cross::Xl => (Down, Up, Sense::Over),
            Cross::Xlu => (Down, Up, Sense::Under),
            Cross::Xr => (Up, Down, Sense::Over),
            Cross::Xru => (Up, Down, Sense::Under),
            Cross::Xdo => (Down, Down, Sense::Over),
            Cross::Xdu => (Down, Down, Sense::Under),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Atom {
    Id(usize, Orient),
    Merge(usize, usize, Orient),
    Split(usize, usize, Orient),
    Cup { right: bool, label: usize },
    Cap { right: bool, label: usize },
    Cross(Cross, usize, usize),
    Green,
    Projector(usize),
    Ladder { kind: Kind, i: usize, power: usize, weight: Vec<i64> },
}

#[derive(Clone, Debug, PartialEq)]
pub enum Node {
    Atom(Atom),
    /// Top first, as written.
    Compose(Vec<Ast>),
    Tensor(Vec<Ast>),
    Scaled(LaurentPoly, Box<Ast>),
    /// Terms with their sign (`true` for subtraction).
    Sum(Vec<(bool, Ast)>),
}

/// A parsed program. Equality ignores source positions.
#[derive(Clone, Debug)]
pub struct Ast {
    pub node: Node,
    pub span: Span,
}

impl PartialEq for Ast {
    fn eq(&self, other: &Ast) -> bool {
        self.node == other.node
    }
}

impl Ast {
    pub fn new(node: Node) -> Self {
        Ast { node, span: Span::default() }
    }

    fn atom(a: Atom) -> Self {
        Ast::new(Node::Atom(a))
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn span_at(&self, start: usize) -> Span {
        let before = &self.src[..start];
        let line = before.matches('\n').count() + 1;
        let col = before.rfind('\n').map_or(start, |i| start - i - 1) + 1;
        Span { start, end: self.pos, line, col }
    }

    fn err(&self, msg: impl Into<String>) -> DslError {
        DslError::at(self.span_at(self.pos), msg)
    }

    fn skip_ws(&mut self) {
        loop {
            let rest = &self.src[self.pos..];
            let trimmed = rest.trim_start();
            self.pos += rest.len() - trimmed.len();
            // `#` comments run to the end of the line
            if trimmed.starts_with('#') {
                self.pos += trimmed.find('\n').unwrap_or(trimmed.len());
            } else {
                break;
            }
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), DslError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(match self.peek() {
                Some(x) => self.err(format!("expected `{}`, found `{}`", c, x)),
                None => self.err(format!("expected `{}`, found end of input", c)),
            })
        }
    }

    fn int(&mut self) -> Result<usize, DslError> {
        self.skip_ws();
        let digits: String = self.src[self.pos..].chars().take_while(char::is_ascii_digit).collect();
        if digits.is_empty() {
            return Err(self.err("expected a number"));
        }
        let v = digits.parse().map_err(|_| self.err("number too large"))?;
        self.pos += digits.len();
        Ok(v)
    }

    fn signed(&mut self) -> Result<i64, DslError> {
        let neg = self.eat('-');
        let v = self.int()? as i64;
        Ok(if neg { -v } else { v })
    }

    fn dir(&mut self) -> Result<Orient, DslError> {
        if self.eat('^') {
            Ok(Orient::Up)
        } else if self.eat('v') {
            Ok(Orient::Down)
        } else {
            Err(self.err("expected a direction `^` or `v`"))
        }
    }

    fn ident(&mut self) -> String {
        self.skip_ws();
        let id: String = self.src[self.pos..].chars().take_while(char::is_ascii_alphabetic).collect();
        self.pos += id.len();
        id
    }

    fn sum(&mut self) -> Result<Ast, DslError> {
        self.skip_ws();
        let start = self.pos;
        let mut terms = Vec::new();
        let mut neg = self.eat('-');
        loop {
            terms.push((neg, self.expr()?));
            if self.eat('+') {
                neg = false;
            } else if self.eat('-') {
                neg = true;
            } else {
                break;
            }
        }
        if terms.len() == 1 && !terms[0].0 {
            return Ok(terms.pop().unwrap().1);
        }
        Ok(Ast { node: Node::Sum(terms), span: self.span_at(start) })
    }

    fn expr(&mut self) -> Result<Ast, DslError> {
        self.skip_ws();
        let start = self.pos;
        let mut parts = vec![self.tens()?];
        while self.eat('.') {
            parts.push(self.tens()?);
        }
        Ok(if parts.len() == 1 { parts.pop().unwrap() } else { Ast { node: Node::Compose(parts), span: self.span_at(start) } })
    }

    fn tens(&mut self) -> Result<Ast, DslError> {
        self.skip_ws();
        let start = self.pos;
        let mut parts = vec![self.atom()?];
        while self.eat('*') {
            parts.push(self.atom()?);
        }
        Ok(if parts.len() == 1 { parts.pop().unwrap() } else { Ast { node: Node::Tensor(parts), span: self.span_at(start) } })
    }

    fn atom(&mut self) -> Result<Ast, DslError> {
        self.skip_ws();
        let start = self.pos;
        if self.eat('(') {
            let inner = self.sum()?;
            self.expect(')')?;
            return Ok(inner);
        }
        if self.eat('[') {
            let close = self.src[self.pos..].find(']').ok_or_else(|| self.err("unclosed scalar `[`"))?;
            let text = &self.src[self.pos..self.pos + close];
            let c = parse_poly(text).map_err(|e| match e {
                glweb::Error::Parse { pos, msg } => DslError::at(self.span_at(self.pos + pos), format!("bad scalar: {}", msg)),
                other => self.err(other.to_string()),
            })?;
            self.pos += close + 1;
            let body = self.atom()?;
            return Ok(Ast { node: Node::Scaled(c, Box::new(body)), span: self.span_at(start) });
        }
        let name = self.ident();
        let a = match name.as_str() {
            "" => {
                return Err(match self.peek() {
                    Some(c) => self.err(format!("unexpected `{}`", c)),
                    None => self.err("unexpected end of input"),
                })
            }
            "id" => {
                self.expect('(')?;
                let k = self.int()?;
                let d = self.dir()?;
                self.expect(')')?;
                Atom::Id(k, d)
            }
            "m" | "s" => {
                self.expect('(')?;
                let k = self.int()?;
                self.expect(',')?;
                let l = self.int()?;
                let d = self.dir()?;
                self.expect(')')?;
                if name == "m" {
                    Atom::Merge(k, l, d)
                } else {
                    Atom::Split(k, l, d)
                }
            }
            "cupL" | "cupR" | "capL" | "capR" => {
                let label = if self.eat('(') {
                    let k = self.int()?;
                    self.expect(')')?;
                    k
                } else {
                    1
                };
                let right = name.ends_with('R');
                if name.starts_with("cup") {
                    Atom::Cup { right, label }
                } else {
                    Atom::Cap { right, label }
                }
            }
            "gd" => Atom::Green,
            "ek" => {
                self.expect('(')?;
                let k = self.int()?;
                self.expect(')')?;
                Atom::Projector(k)
            }
            "Fl" | "El" => {
                self.expect('(')?;
                let i = self.int()?;
                self.expect(',')?;
                let power = self.int()?;
                self.expect(')')?;
                self.expect('@')?;
                self.expect('[')?;
                let mut weight = vec![self.signed()?];
                while self.eat(',') {
                    weight.push(self.signed()?);
                }
                self.expect(']')?;
                let kind = if name == "Fl" { Kind::F } else { Kind::E };
                Atom::Ladder { kind, i, power, weight }
            }
            other => match CROSSES.iter().find(|(_, s)| *s == other) {
                Some(&(c, _)) => {
                    self.expect('(')?;
                    let k = self.int()?;
                    self.expect(',')?;
                    let l = self.int()?;
                    self.expect(')')?;
                    Atom::Cross(c, k, l)
                }
                None => return Err(DslError::at(self.span_at(start), format!("unknown generator `{}`", other))),
            },
        };
        Ok(Ast { node: Node::Atom(a), span: self.span_at(start) })
    }
}

pub fn parse(text: &str) -> Result<Ast, DslError> {
    let mut p = Parser { src: text, pos: 0 };
    let ast = p.sum()?;
    if let Some(c) = p.peek() {
        return Err(p.err(format!("unexpected `{}` after the expression", c)));
    }
    Ok(ast)
}

fn dir(o: Orient) -> char {
    match o {
        Orient::Up => '^',
        Orient::Down => 'v',
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Id(k, o) => write!(f, "id({}{})", k, dir(*o)),
            Atom::Merge(k, l, o) => write!(f, "m({},{}{})", k, l, dir(*o)),
            Atom::Split(k, l, o) => write!(f, "s({},{}{})", k, l, dir(*o)),
            Atom::Cup { right, label } | Atom::Cap { right, label } => {
                let base = if matches!(self, Atom::Cup { .. }) { "cup" } else { "cap" };
                write!(f, "{}{}", base, if *right { 'R' } else { 'L' })?;
                if *label != 1 {
                    write!(f, "({})", label)?;
                }
                Ok(())
            }
            Atom::Cross(c, k, l) => write!(f, "{}({},{})", c.name(), k, l),
            Atom::Green => f.write_str("gd"),
            Atom::Projector(k) => write!(f, "ek({})", k),
            Atom::Ladder { kind, i, power, weight } => {
                let name = if *kind == Kind::F { "Fl" } else { "El" };
                let w: Vec<String> = weight.iter().map(i64::to_string).collect();
                write!(f, "{}({},{})@[{}]", name, i, power, w.join(","))
            }
        }
    }
}

/// Writes `ast` back as text that parses to an equal tree.
pub fn render(ast: &Ast) -> String {
    match &ast.node {
        Node::Atom(a) => a.to_string(),
        Node::Compose(ps) => ps
            .iter()
            .map(|p| if matches!(p.node, Node::Compose(_) | Node::Sum(_)) { format!("({})", render(p)) } else { render(p) })
            .collect::<Vec<_>>()
            .join(" . "),
        Node::Tensor(ps) => ps
            .iter()
            .map(|p| {
                if matches!(p.node, Node::Compose(_) | Node::Tensor(_) | Node::Sum(_)) {
                    format!("({})", render(p))
                } else {
                    render(p)
                }
            })
            .collect::<Vec<_>>()
            .join(" * "),
        Node::Scaled(c, body) => {
            let b = render(body);
            if matches!(body.node, Node::Atom(_) | Node::Scaled(..)) {
                format!("[{}] {}", c, b)
            } else {
                format!("[{}] ({})", c, b)
            }
        }
        Node::Sum(ts) => {
            let mut out = String::new();
            for (i, (neg, t)) in ts.iter().enumerate() {
                let body = if matches!(t.node, Node::Sum(_)) { format!("({})", render(t)) } else { render(t) };
                match (i, neg) {
                    (0, false) => {}
                    (0, true) => out.push_str("-"),
                    (_, false) => out.push_str(" + "),
                    (_, true) => out.push_str(" - "),
                }
                out.push_str(&body);
            }
            out
        }
    }
}

/// Elaboration settings: the rank, and how thin crossings are written.
#[derive(Clone, Copy, Debug)]
pub struct Elab {
    pub n: usize,
    pub flavor: Flavor,
}

/// A program's meaning: a web, or a word in the idempotented quantum group.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Web(WebExpr),
    Dot(DotWord),
}

impl Value {
    pub fn into_web(self) -> WebExpr {
        match self {
            Value::Web(w) => w,
            Value::Dot(d) => a_mn(&d),
        }
    }
}

fn wrap<T>(span: Span, r: Result<T, glweb::Error>) -> Result<T, DslError> {
    r.map_err(|e| DslError::at(span, e.to_string()))
}

pub fn elaborate(ast: &Ast, opts: &Elab) -> Result<Value, DslError> {
    let span = ast.span;
    Ok(match &ast.node {
        Node::Atom(a) => atom(a, span, opts)?,
        Node::Scaled(c, body) => Value::Web(elaborate(body, opts)?.into_web().scale(&LaurentFraction::from(c.clone()))),
        Node::Tensor(ps) => {
            let ws = ps.iter().map(|p| Ok(elaborate(p, opts)?.into_web())).collect::<Result<Vec<_>, DslError>>()?;
            Value::Web(tensor_all(&ws))
        }
        Node::Sum(ts) => {
            let mut acc: Option<WebExpr> = None;
            for (neg, t) in ts {
                let mut w = elaborate(t, opts)?.into_web();
                if *neg {
                    w = w.scale(&LaurentFraction::from_int(-1));
                }
                acc = Some(match acc {
                    None => w,
                    Some(a) => wrap(t.span, a.add(&w))?,
                });
            }
            Value::Web(acc.expect("a sum has terms"))
        }
        Node::Compose(ps) => {
            let mut acc = elaborate(ps.last().expect("a composite has parts"), opts)?;
            for p in ps.iter().rev().skip(1) {
                let top = elaborate(p, opts)?;
                acc = match (top, acc) {
                    (Value::Dot(t), Value::Dot(b)) if t.base == b.target() => {
                        let mut letters = t.letters;
                        letters.extend(b.letters);
                        Value::Dot(DotWord::new(b.base, letters))
                    }
                    (t, b) => Value::Web(wrap(p.span, t.into_web().compose(&b.into_web()))?),
                };
            }
            acc
        }
    })
}

fn atom(a: &Atom, span: Span, opts: &Elab) -> Result<Value, DslError> {
    let bad = |m: String| Err(DslError::at(span, m));
    let web = match *a {
        Atom::Id(k, o) => WebExpr::id(&WebObject::new([Strand::new(k, o)])),
        Atom::Merge(k, l, o) => thick_merge(k, l, o),
        Atom::Split(k, l, o) => thick_split(k, l, o),
        Atom::Cup { right, label } => match (right, label) {
            (_, 0) => unit(),
            (false, _) => cup_l(label),
            (true, _) => cup_r(label),
        },
        Atom::Cap { right, label } => match (right, label) {
            (_, 0) => unit(),
            (false, _) => cap_l(label),
            (true, _) => cap_r(label),
        },
        Atom::Cross(c, k, l) => {
            let (a, b, s) = c.shape();
            if opts.flavor == Flavor::Exterior && c == Cross::Xo || opts.flavor == Flavor::Exterior && c == Cross::Xu {
                if (k, l) == (1, 1) {
                    return Ok(Value::Web(thin_cross(opts.n, s, Flavor::Exterior)));
                }
            }
            thick_cross(Strand::new(k, a), Strand::new(l, b), s)
        }
        Atom::Green => WebExpr::gen(Gen::GreenDumbbell),
        Atom::Projector(k) => {
            if k == 0 {
                return bad("ek needs k >= 1".into());
            }
            projector(k)
        }
        Atom::Ladder { kind, i, power, ref weight } => {
            if i == 0 || i >= weight.len() {
                return bad(format!("ladder index {} out of range for a weight with {} entries", i, weight.len()));
            }
            let letter = if kind == Kind::F { Letter::f(i, power) } else { Letter::e(i, power) };
            return Ok(Value::Dot(DotWord::new(GlmWeight::new(weight), vec![letter])));
        }
    };
    Ok(Value::Web(web))
}

/// Parses and elaborates to a web.
pub fn web(text: &str, opts: &Elab) -> Result<WebExpr, DslError> {
    Ok(elaborate(&parse(text)?, opts)?.into_web())
}

fn gen_atom(g: Gen) -> Atom {
    match g {
        Gen::Id(s) => Atom::Id(s.label, s.orient),
        Gen::MergeUp(k) => Atom::Merge(k, 1, Orient::Up),
        Gen::SplitUp(k) => Atom::Split(k, 1, Orient::Up),
        Gen::MergeDown(k) => Atom::Merge(k, 1, Orient::Down),
        Gen::SplitDown(k) => Atom::Split(k, 1, Orient::Down),
        Gen::CupL => Atom::Cup { right: false, label: 1 },
        Gen::CapL => Atom::Cap { right: false, label: 1 },
        Gen::CupR => Atom::Cup { right: true, label: 1 },
        Gen::CapR => Atom::Cap { right: true, label: 1 },
        Gen::Cross(d, s) => {
            let c = match (d, s) {
                (CrossDir::Up, Sense::Over) => Cross::Xo,
                (CrossDir::Up, Sense::Under) => Cross::Xu,
                (CrossDir::Left, Sense::Over) => Cross::Xl,
                (CrossDir::Left, Sense::Under) => Cross::Xlu,
                (CrossDir::Right, Sense::Over) => Cross::Xr,
                (CrossDir::Right, Sense::Under) => Cross::Xru,
                (CrossDir::Down, Sense::Over) => Cross::Xdo,
                (CrossDir::Down, Sense::Under) => Cross::Xdu,
            };
            Atom::Cross(c, 1, 1)
        }
        Gen::GreenDumbbell => Atom::Green,
    }
}

fn identity_ast(obj: &WebObject) -> Ast {
    let ids: Vec<Ast> = obj.strands().iter().map(|s| Ast::atom(Atom::Id(s.label, s.orient))).collect();
    match ids.len() {
        0 => Ast::atom(Atom::Id(0, Orient::Up)),
        1 => ids.into_iter().next().unwrap(),
        _ => Ast::new(Node::Tensor(ids)),
    }
}

fn diagram_ast(d: &Diagram) -> Ast {
    let mut layers: Vec<Ast> = d
        .layers()
        .iter()
        .rev()
        .map(|layer| {
            let gs: Vec<Ast> = layer.iter().map(|&g| Ast::atom(gen_atom(g))).collect();
            if gs.len() == 1 {
                gs.into_iter().next().unwrap()
            } else {
                Ast::new(Node::Tensor(gs))
            }
        })
        .collect();
    match layers.len() {
        0 => identity_ast(d.dom()),
        1 => layers.pop().unwrap(),
        _ => Ast::new(Node::Compose(layers)),
    }
}

/// A program for `w` in its generators, or `None` when a coefficient is not
/// a Laurent polynomial (or `w` is a zero map between different objects).
pub fn from_expr(w: &WebExpr) -> Option<Ast> {
    if w.is_zero() {
        return (w.dom() == w.cod()).then(|| Ast::new(Node::Scaled(LaurentPoly::from_int(0), Box::new(identity_ast(w.dom())))));
    }
    let one = LaurentPoly::from_int(1);
    let mut terms = Vec::new();
    for (d, c) in w.terms() {
        let c = c.as_poly()?;
        let body = diagram_ast(d);
        terms.push(if *c == one {
            (false, body)
        } else if *c == -one.clone() {
            (true, body)
        } else {
            (false, Ast::new(Node::Scaled(c.clone(), Box::new(body))))
        });
    }
    Some(if terms.len() == 1 && !terms[0].0 { terms.pop().unwrap().1 } else { Ast::new(Node::Sum(terms)) })
}

/// Reads an object such as `1^ * 2v`; `0` or an empty string is the unit.
pub fn parse_object(text: &str) -> Result<WebObject, DslError> {
    let mut p = Parser { src: text, pos: 0 };
    let mut strands = Vec::new();
    if p.peek().is_none() {
        return Ok(WebObject::empty());
    }
    loop {
        let k = p.int()?;
        if k == 0 && p.peek().is_none() && strands.is_empty() {
            return Ok(WebObject::empty());
        }
        let o = p.dir()?;
        strands.push(Strand::new(k, o));
        if !p.eat('*') {
            break;
        }
    }
    if let Some(c) = p.peek() {
        return Err(p.err(format!("unexpected `{}` in object", c)));
    }
    Ok(WebObject::new(strands))
}
