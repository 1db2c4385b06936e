use alloc::format;
use alloc::string::{String, ToString};
use core::fmt;

use crate::linalg::{Matrix, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skip => "skip",
        })
    }
}

/// Where two sides of a failed check disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub row: usize,
    pub col: usize,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of one relation or evaluation check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub name: String,
    pub params: String,
    pub status: Status,
    pub lhs: String,
    pub rhs: String,
    pub witness: Option<Witness>,
    pub note: String,
}

/// Short text summary of a matrix: the scalar itself when 1x1.
pub fn digest<T: Scalar>(m: &Matrix<T>) -> String {
    if m.rows() == 1 && m.cols() == 1 {
        return m.get(0, 0).to_string();
    }
    let kind = if m.is_zero() {
        " zero"
    } else if m.is_identity() {
        " identity"
    } else {
        ""
    };
    format!("{}x{}{} matrix, {} nonzero", m.rows(), m.cols(), kind, m.nnz())
}

impl Report {
    pub fn new(name: impl Into<String>, params: impl Into<String>) -> Self {
        Report {
            name: name.into(),
            params: params.into(),
            status: Status::Skip,
            lhs: String::new(),
            rhs: String::new(),
            witness: None,
            note: String::new(),
        }
    }

    pub fn matrices<T: Scalar>(name: impl Into<String>, params: impl Into<String>, lhs: &Matrix<T>, rhs: &Matrix<T>) -> Self {
        let mut r = Report::new(name, params);
        r.lhs = digest(lhs);
        r.rhs = digest(rhs);
        match lhs.first_difference(rhs) {
            None => r.status = Status::Pass,
            Some((row, col, a, b)) => {
                r.status = Status::Fail;
                r.witness = Some(Witness { row, col, lhs: a.to_string(), rhs: b.to_string() });
            }
        }
        r
    }

    pub fn scalars<T: PartialEq + fmt::Display>(name: impl Into<String>, params: impl Into<String>, lhs: &T, rhs: &T) -> Self {
        let mut r = Report::new(name, params);
        r.lhs = lhs.to_string();
        r.rhs = rhs.to_string();
        if lhs == rhs {
            r.status = Status::Pass;
        } else {
            r.status = Status::Fail;
            r.witness = Some(Witness { row: 0, col: 0, lhs: r.lhs.clone(), rhs: r.rhs.clone() });
        }
        r
    }

    pub fn fail(name: impl Into<String>, params: impl Into<String>, note: impl Into<String>) -> Self {
        let mut r = Report::new(name, params);
        r.status = Status::Fail;
        r.note = note.into();
        r.witness = Some(Witness { row: 0, col: 0, lhs: String::new(), rhs: String::new() });
        r
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = note.into();
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Folds several reports into one that passes iff all of them do; the
    /// first failure supplies the witness.
    pub fn all(name: impl Into<String>, params: impl Into<String>, parts: impl IntoIterator<Item = Report>) -> Self {
        let mut r = Report::new(name, params);
        r.status = Status::Pass;
        let mut count = 0;
        let mut only = None;
        for p in parts {
            count += 1;
            if count == 1 {
                only = Some((p.lhs.clone(), p.rhs.clone()));
            }
            if p.status == Status::Fail && r.status == Status::Pass {
                r.status = Status::Fail;
                r.lhs = p.lhs.clone();
                r.rhs = p.rhs.clone();
                r.witness = p.witness.clone();
                r.note = format!("{} [{}] failed {}", p.name, p.params, p.note);
            }
        }
        if r.status == Status::Pass {
            r.note = format!("{} sub-checks", count);
            // a single scalar check keeps its values
            if let (1, Some((l, rr))) = (count, only) {
                r.lhs = l;
                r.rhs = rr;
            }
        }
        r
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.status, self.name)?;
        if !self.params.is_empty() {
            write!(f, " [{}]", self.params)?;
        }
        if !self.lhs.is_empty() || !self.rhs.is_empty() {
            write!(f, ": {} == {}", self.lhs, self.rhs)?;
        }
        if let Some(w) = &self.witness {
            write!(f, " (differs at ({}, {}): {} vs {})", w.row, w.col, w.lhs, w.rhs)?;
        }
        if !self.note.is_empty() {
            write!(f, " -- {}", self.note)?;
        }
        Ok(())
    }
}
