use alloc::collections::btree_map::Entry;
use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use super::diagram::{Diagram, Gen};
use super::object::WebObject;
use crate::qalg::LaurentFraction;
use crate::Error;

/// Which crossing expansion a web was built with.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Flavor {
    #[default]
    Symmetric,
    Exterior,
}

impl Flavor {
    fn join(self, o: Flavor) -> Flavor {
        if self == Flavor::Exterior || o == Flavor::Exterior {
            Flavor::Exterior
        } else {
            Flavor::Symmetric
        }
    }
}

/// A linear combination of diagrams with a common boundary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WebExpr {
    dom: WebObject,
    cod: WebObject,
    pub flavor: Flavor,
    terms: BTreeMap<Diagram, LaurentFraction>,
}

impl WebExpr {
    pub fn zero(dom: WebObject, cod: WebObject) -> Self {
        WebExpr { dom, cod, flavor: Flavor::Symmetric, terms: BTreeMap::new() }
    }

    pub fn id(obj: &WebObject) -> Self {
        Diagram::id(obj).into()
    }

    pub fn gen(g: Gen) -> Self {
        Diagram::gen(g).into()
    }

    pub fn term(c: LaurentFraction, d: Diagram) -> Self {
        let mut w = WebExpr::zero(d.dom().clone(), d.cod());
        w.push(c, d);
        w
    }

    fn push(&mut self, c: LaurentFraction, d: Diagram) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(d) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn dom(&self) -> &WebObject {
        &self.dom
    }

    pub fn cod(&self) -> &WebObject {
        &self.cod
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Diagram, &LaurentFraction)> + '_ {
        self.terms.iter()
    }

    pub fn with_flavor(mut self, f: Flavor) -> Self {
        self.flavor = f;
        self
    }

    pub fn scale(&self, c: &LaurentFraction) -> WebExpr {
        let mut out = WebExpr::zero(self.dom.clone(), self.cod.clone());
        out.flavor = self.flavor;
        for (d, v) in &self.terms {
            out.push(v * c, d.clone());
        }
        out
    }

    pub fn add(&self, o: &WebExpr) -> Result<WebExpr, Error> {
        if self.dom != o.dom || self.cod != o.cod {
            return Err(Error::BoundaryMismatch {
                layer: None,
                expected: alloc::format!("{} -> {}", self.dom, self.cod),
                found: alloc::format!("{} -> {}", o.dom, o.cod),
            });
        }
        let mut out = self.clone();
        out.flavor = self.flavor.join(o.flavor);
        for (d, v) in &o.terms {
            out.push(v.clone(), d.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, o: &WebExpr) -> Result<WebExpr, Error> {
        self.add(&o.scale(&-LaurentFraction::one()))
    }

    /// `self` glued on top of `below`.
    pub fn compose(&self, below: &WebExpr) -> Result<WebExpr, Error> {
        if below.cod != self.dom {
            return Err(Error::BoundaryMismatch { layer: None, expected: below.cod.to_string(), found: self.dom.to_string() });
        }
        let mut out = WebExpr::zero(below.dom.clone(), self.cod.clone());
        out.flavor = self.flavor.join(below.flavor);
        for (a, x) in &self.terms {
            for (b, y) in &below.terms {
                out.push(x * y, a.compose(b)?);
            }
        }
        Ok(out)
    }

    pub fn tensor(&self, right: &WebExpr) -> WebExpr {
        let mut out = WebExpr::zero(self.dom.tensor(&right.dom), self.cod.tensor(&right.cod));
        out.flavor = self.flavor.join(right.flavor);
        for (a, x) in &self.terms {
            for (b, y) in &right.terms {
                out.push(x * y, a.tensor(b));
            }
        }
        out
    }

    /// Largest label occurring anywhere; a syntactic bound on complexity.
    pub fn max_label(&self) -> usize {
        self.terms.keys().map(|d| d.max_label()).max().unwrap_or(0)
    }

    /// Whether all coefficients are Laurent polynomials.
    pub fn has_integral_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_integral())
    }
}

impl From<Diagram> for WebExpr {
    fn from(d: Diagram) -> Self {
        WebExpr::term(LaurentFraction::one(), d)
    }
}

/// Tensor product of a list (left to right); `obj`-identity when empty.
pub fn tensor_all(parts: &[WebExpr]) -> WebExpr {
    parts.iter().fold(WebExpr::id(&WebObject::empty()), |acc, p| acc.tensor(p))
}

/// Composite of a list given bottom to top.
pub fn compose_all(bottom_up: &[WebExpr]) -> Result<WebExpr, Error> {
    let mut it = bottom_up.iter();
    let mut acc = it.next().cloned().ok_or_else(|| Error::InvalidArgument("empty composite".into()))?;
    for w in it {
        acc = w.compose(&acc)?;
    }
    Ok(acc)
}

impl fmt::Display for WebExpr {
    /// DSL rendering: `[c] (diagram) + [c] (diagram) + ...`; coefficients
    /// equal to one are omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "[0] ({})", Diagram::id(&self.dom));
        }
        let ts: Vec<_> = self.terms.iter().collect();
        for (i, (d, c)) in ts.into_iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if c.is_one() {
                write!(f, "({})", d)?;
            } else {
                write!(f, "[{}] ({})", c, d)?;
            }
        }
        Ok(())
    }
}
