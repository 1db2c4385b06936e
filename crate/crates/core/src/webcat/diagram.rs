use alloc::format;
use alloc::vec;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;

use super::object::{Orient, Strand, WebObject};
use crate::Error;

/// Sign of a crossing. `Over` is the positive crossing: for upward strands
/// the one running bottom-left to top-right is on top. The other directions
/// are its mates and rotations, so the leftward `Over` crossing has the
/// upward strand on top, and the rightward `Over` has the downward strand on
/// top.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sense {
    Over,
    Under,
}

impl Sense {
    pub fn flip(self) -> Sense {
        match self {
            Sense::Over => Sense::Under,
            Sense::Under => Sense::Over,
        }
    }
}

/// Orientation pattern of a thin crossing, named by the boundary words:
/// `Up: 1^ 1^`, `Down: 1v 1v`, `Left: 1v 1^ -> 1^ 1v`, `Right: 1^ 1v -> 1v 1^`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CrossDir {
    Up,
    Down,
    Left,
    Right,
}

impl CrossDir {
    /// Direction of a crossing whose bottom word is `(a, b)`.
    pub fn of(a: Orient, b: Orient) -> CrossDir {
        match (a, b) {
            (Orient::Up, Orient::Up) => CrossDir::Up,
            (Orient::Down, Orient::Down) => CrossDir::Down,
            (Orient::Down, Orient::Up) => CrossDir::Left,
            (Orient::Up, Orient::Down) => CrossDir::Right,
        }
    }

    pub fn bottom(self) -> (Orient, Orient) {
        match self {
            CrossDir::Up => (Orient::Up, Orient::Up),
            CrossDir::Down => (Orient::Down, Orient::Down),
            CrossDir::Left => (Orient::Down, Orient::Up),
            CrossDir::Right => (Orient::Up, Orient::Down),
        }
    }
}

/// Atomic generators. Everything thick is built from these by the builders
/// in [`super::build`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    Id(Strand),
    /// `k^ * 1^ -> (k+1)^`
    MergeUp(usize),
    /// `(k+1)^ -> k^ * 1^`
    SplitUp(usize),
    /// `kv * 1v -> (k+1)v`
    MergeDown(usize),
    /// `(k+1)v -> kv * 1v`
    SplitDown(usize),
    /// `0 -> 1^ * 1v`
    CupL,
    /// `1v * 1^ -> 0`
    CapL,
    /// `0 -> 1v * 1^`
    CupR,
    /// `1^ * 1v -> 0`
    CapR,
    Cross(CrossDir, Sense),
    /// The exterior ("green") 2-dumbbell on `1^ * 1^`.
    GreenDumbbell,
}

impl Gen {
    pub fn dom(&self) -> Vec<Strand> {
        use Gen::*;
        match *self {
            Id(s) => vec![s],
            MergeUp(k) => vec![Strand::up(k), Strand::up(1)],
            SplitUp(k) => vec![Strand::up(k + 1)],
            MergeDown(k) => vec![Strand::down(k), Strand::down(1)],
            SplitDown(k) => vec![Strand::down(k + 1)],
            CupL | CupR => vec![],
            CapL => vec![Strand::down(1), Strand::up(1)],
            CapR => vec![Strand::up(1), Strand::down(1)],
            Cross(d, _) => {
                let (a, b) = d.bottom();
                vec![Strand::new(1, a), Strand::new(1, b)]
            }
            GreenDumbbell => vec![Strand::up(1), Strand::up(1)],
        }
    }

    pub fn cod(&self) -> Vec<Strand> {
        use Gen::*;
        match *self {
            Id(s) => vec![s],
            MergeUp(k) => vec![Strand::up(k + 1)],
            SplitUp(k) => vec![Strand::up(k), Strand::up(1)],
            MergeDown(k) => vec![Strand::down(k + 1)],
            SplitDown(k) => vec![Strand::down(k), Strand::down(1)],
            CupL => vec![Strand::up(1), Strand::down(1)],
            CupR => vec![Strand::down(1), Strand::up(1)],
            CapL | CapR => vec![],
            Cross(d, _) => {
                let (a, b) = d.bottom();
                vec![Strand::new(1, b), Strand::new(1, a)]
            }
            GreenDumbbell => vec![Strand::up(1), Strand::up(1)],
        }
    }

    pub fn is_id(&self) -> bool {
        matches!(self, Gen::Id(_))
    }

    pub fn arity(&self) -> (usize, usize) {
        (self.dom().len(), self.cod().len())
    }

    /// Largest label on an edge of this generator.
    pub fn max_label(&self) -> usize {
        self.dom().iter().chain(self.cod().iter()).map(|s| s.label).max().unwrap_or(0)
    }

    fn valid(&self) -> bool {
        match *self {
            Gen::Id(s) => s.label > 0,
            Gen::MergeUp(k) | Gen::SplitUp(k) | Gen::MergeDown(k) | Gen::SplitDown(k) => k > 0,
            _ => true,
        }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Gen::*;
        match *self {
            Id(s) => write!(f, "id({})", s),
            MergeUp(k) => write!(f, "m({},1^)", k),
            SplitUp(k) => write!(f, "s({},1^)", k),
            MergeDown(k) => write!(f, "m({},1v)", k),
            SplitDown(k) => write!(f, "s({},1v)", k),
            CupL => f.write_str("cupL"),
            CapL => f.write_str("capL"),
            CupR => f.write_str("cupR"),
            CapR => f.write_str("capR"),
            Cross(d, s) => {
                let base = match d {
                    CrossDir::Up => "x",
                    CrossDir::Down => "xd",
                    CrossDir::Left => "xl",
                    CrossDir::Right => "xr",
                };
                let sfx = match (d, s) {
                    (CrossDir::Up | CrossDir::Down, Sense::Over) => "o",
                    (CrossDir::Up | CrossDir::Down, Sense::Under) => "u",
                    (_, Sense::Over) => "",
                    (_, Sense::Under) => "u",
                };
                write!(f, "{}{}(1,1)", base, sfx)
            }
            GreenDumbbell => f.write_str("gd"),
        }
    }
}

pub(crate) fn word(strands: &[Strand]) -> WebObject {
    WebObject(strands.to_vec())
}

fn layer_dom(layer: &[Gen]) -> Vec<Strand> {
    layer.iter().flat_map(|g| g.dom()).collect()
}

fn layer_cod(layer: &[Gen]) -> Vec<Strand> {
    layer.iter().flat_map(|g| g.cod()).collect()
}

/// A layered web: `layers[0]` is the bottom. Every layer spans the full
/// width, identities included. Stored diagrams are kept in gravity normal
/// form (every generator sunk as low as the interchange law allows, no
/// all-identity layers), so structural equality is equality up to
/// interchange.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagram {
    dom: WebObject,
    layers: Vec<Vec<Gen>>,
}

impl Diagram {
    pub fn id(obj: &WebObject) -> Self {
        Diagram { dom: obj.clone(), layers: Vec::new() }
    }

    pub fn empty() -> Self {
        Self::id(&WebObject::empty())
    }

    pub fn gen(g: Gen) -> Self {
        assert!(g.valid(), "invalid generator {:?}", g);
        Self::from_layers(word(&g.dom()), vec![vec![g]]).expect("single generator")
    }

    /// Checks boundaries layer by layer, then normalizes.
    pub fn from_layers(dom: WebObject, layers: Vec<Vec<Gen>>) -> Result<Self, Error> {
        let mut cur = dom.0.clone();
        for (i, layer) in layers.iter().enumerate() {
            if let Some(g) = layer.iter().find(|g| !g.valid()) {
                return Err(Error::InvalidArgument(format!("invalid generator {:?} in layer {}", g, i)));
            }
            let d = layer_dom(layer);
            if d != cur {
                return Err(Error::BoundaryMismatch { layer: Some(i), expected: word(&cur).to_string(), found: word(&d).to_string() });
            }
            cur = layer_cod(layer);
        }
        let mut out = Diagram { dom, layers };
        out.normalize();
        Ok(out)
    }

    pub fn dom(&self) -> &WebObject {
        &self.dom
    }

    pub fn cod(&self) -> WebObject {
        match self.layers.last() {
            Some(l) => word(&layer_cod(l)),
            None => self.dom.clone(),
        }
    }

    pub fn layers(&self) -> &[Vec<Gen>] {
        &self.layers
    }

    pub fn is_closed(&self) -> bool {
        self.dom.is_empty() && self.cod().is_empty()
    }

    /// Non-identity generators, bottom to top.
    pub fn generators(&self) -> impl Iterator<Item = &Gen> + '_ {
        self.layers.iter().flatten().filter(|g| !g.is_id())
    }

    pub fn num_generators(&self) -> usize {
        self.generators().count()
    }

    pub fn max_label(&self) -> usize {
        let b = self.dom.0.iter().map(|s| s.label).max().unwrap_or(0);
        self.layers.iter().flatten().map(|g| g.max_label()).fold(b, usize::max)
    }

    /// `self` on top of `below`.
    pub fn compose(&self, below: &Diagram) -> Result<Diagram, Error> {
        let c = below.cod();
        if c != self.dom {
            return Err(Error::BoundaryMismatch { layer: Some(below.layers.len()), expected: c.to_string(), found: self.dom.to_string() });
        }
        let mut layers = below.layers.clone();
        layers.extend(self.layers.iter().cloned());
        let mut out = Diagram { dom: below.dom.clone(), layers };
        out.normalize();
        Ok(out)
    }

    /// Juxtaposition, `self` on the left.
    pub fn tensor(&self, right: &Diagram) -> Diagram {
        let h = self.layers.len().max(right.layers.len());
        let pad = |d: &Diagram| -> Vec<Vec<Gen>> {
            let mut ls = d.layers.clone();
            let top: Vec<Gen> = d.cod().0.into_iter().map(Gen::Id).collect();
            while ls.len() < h {
                ls.push(top.clone());
            }
            ls
        };
        let (a, b) = (pad(self), pad(right));
        let layers = a.into_iter().zip(b).map(|(mut x, y)| {
            x.extend(y);
            x
        });
        let mut out = Diagram { dom: self.dom.tensor(&right.dom), layers: layers.collect() };
        out.normalize();
        out
    }

    fn normalize(&mut self) {
        // Identity strands of width zero cannot occur; pad empty layers away.
        while self.sink_one() {}
        self.layers.retain(|l| l.iter().any(|g| !g.is_id()));
    }

    /// Moves one generator down one layer if the interchange law allows it.
    fn sink_one(&mut self) -> bool {
        for i in 1..self.layers.len() {
            if let Some((j, slot)) = self.find_sinkable(i) {
                let g = self.layers[i][j];
                let lower = &mut self.layers[i - 1];
                match slot {
                    Slot::Ids(start, m) => {
                        lower.splice(start..start + m, [g]);
                    }
                    Slot::Gap(at) => lower.insert(at, g),
                }
                let outs: Vec<Gen> = g.cod().into_iter().map(Gen::Id).collect();
                self.layers[i].splice(j..j + 1, outs);
                return true;
            }
        }
        false
    }

    fn find_sinkable(&self, i: usize) -> Option<(usize, Slot)> {
        let lower = &self.layers[i - 1];
        // For each output position of `lower`: owning generator index.
        let mut owner = Vec::new();
        // gen_start[p] = index in `lower` of the first generator whose outputs
        // begin at position p (after skipping zero-output ones at p).
        let mut cap_at = Vec::new();
        let mut boundary_index = Vec::new();
        let mut pos = 0;
        for (gi, g) in lower.iter().enumerate() {
            let c = g.cod().len();
            if c == 0 {
                cap_at.push(pos);
                continue;
            }
            boundary_index.push((pos, gi));
            for _ in 0..c {
                owner.push(gi);
            }
            pos += c;
        }
        let width = pos;
        let mut at = 0;
        for (j, g) in self.layers[i].iter().enumerate() {
            let m = g.dom().len();
            if !g.is_id() {
                if m > 0 {
                    // Contiguous identities only: a cap between them must stay put.
                    if owner[at + m - 1] - owner[at] == m - 1 && (at..at + m).all(|p| lower[owner[p]].is_id()) {
                        return Some((j, Slot::Ids(owner[at], m)));
                    }
                } else if !cap_at.contains(&at) {
                    if at == width {
                        return Some((j, Slot::Gap(lower.len())));
                    }
                    if let Some(&(_, gi)) = boundary_index.iter().find(|&&(p, _)| p == at) {
                        return Some((j, Slot::Gap(gi)));
                    }
                }
            }
            at += m;
        }
        None
    }
}

enum Slot {
    /// Replace `m` identity generators starting at this index.
    Ids(usize, usize),
    /// Insert at this index.
    Gap(usize),
}

impl fmt::Display for Diagram {
    /// DSL rendering: layers top to bottom joined by ` . `.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.layers.is_empty() {
            if self.dom.is_empty() {
                return f.write_str("id(0^)");
            }
            for (i, s) in self.dom.0.iter().enumerate() {
                if i > 0 {
                    f.write_str(" * ")?;
                }
                write!(f, "id({})", s)?;
            }
            return Ok(());
        }
        for (li, layer) in self.layers.iter().enumerate().rev() {
            if li + 1 < self.layers.len() {
                f.write_str(" . ")?;
            }
            f.write_str("(")?;
            for (i, g) in layer.iter().enumerate() {
                if i > 0 {
                    f.write_str(" * ")?;
                }
                write!(f, "{}", g)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}
