use alloc::vec::Vec;
use core::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orient {
    Up,
    Down,
}

impl Orient {
    pub fn flip(self) -> Orient {
        match self {
            Orient::Up => Orient::Down,
            Orient::Down => Orient::Up,
        }
    }
}

/// A boundary point: a label `k >= 1` and an orientation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Strand {
    pub label: usize,
    pub orient: Orient,
}

impl Strand {
    pub fn up(label: usize) -> Self {
        Strand { label, orient: Orient::Up }
    }

    pub fn down(label: usize) -> Self {
        Strand { label, orient: Orient::Down }
    }

    pub fn new(label: usize, orient: Orient) -> Self {
        Strand { label, orient }
    }

    /// Same label, opposite orientation.
    pub fn dual(self) -> Self {
        Strand { label: self.label, orient: self.orient.flip() }
    }
}

impl fmt::Display for Strand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.label, if self.orient == Orient::Up { '^' } else { 'v' })
    }
}

/// A tensor word of strands. Zero labels never appear: constructors drop
/// them, which identifies `0^`, `0v` and the empty word.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WebObject(pub Vec<Strand>);

impl WebObject {
    pub fn empty() -> Self {
        WebObject(Vec::new())
    }

    pub fn new(strands: impl IntoIterator<Item = Strand>) -> Self {
        WebObject(strands.into_iter().filter(|s| s.label > 0).collect())
    }

    pub fn up(labels: &[usize]) -> Self {
        Self::new(labels.iter().map(|&k| Strand::up(k)))
    }

    pub fn down(labels: &[usize]) -> Self {
        Self::new(labels.iter().map(|&k| Strand::down(k)))
    }

    pub fn strands(&self) -> &[Strand] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn tensor(&self, other: &WebObject) -> WebObject {
        WebObject(self.0.iter().chain(&other.0).copied().collect())
    }

    /// The dual object: reversed, orientations flipped.
    pub fn dual(&self) -> WebObject {
        WebObject(self.0.iter().rev().map(|s| s.dual()).collect())
    }

    /// Sum of labels, counted with sign by orientation.
    pub fn charge(&self) -> i64 {
        self.0
            .iter()
            .map(|s| if s.orient == Orient::Up { s.label as i64 } else { -(s.label as i64) })
            .sum()
    }
}

impl fmt::Display for WebObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0^");
        }
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" * ")?;
            }
            write!(f, "{}", s)?;
        }
        Ok(())
    }
}
