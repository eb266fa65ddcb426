//! The object-spec mini-grammar:
//!
//! ```text
//! spec := "[" m "|" k1 "," … "," km "]"   Θ₂ shape
//!       | "[" m "]"                       the ordinal [m] as a 2-category
//!       | "C0" | "C1" | "C2"              free cells
//!       | "I"                             the walking isomorphism
//!       | "Sigma" spec                    suspension of a 1-category
//! ```

use std::fmt;
use std::str::FromStr;

use theta2kit_core::twocat::{
    cell, free_iso, ordinal, suspend_category, theta2_object, Fin2Category, FinCategory, Theta2Shape,
};

use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ObjectSpec {
    Shape(Theta2Shape),
    Ordinal(usize),
    Cell(usize),
    Iso,
    Sigma(Box<ObjectSpec>),
}

impl ObjectSpec {
    /// The underlying 1-category, when the object is locally discrete and
    /// named as such.
    pub fn category(&self) -> Option<FinCategory> {
        match self {
            ObjectSpec::Ordinal(m) => ordinal(*m as isize).ok(),
            ObjectSpec::Cell(j) if *j <= 1 => ordinal(*j as isize).ok(),
            ObjectSpec::Iso => Some(free_iso()),
            ObjectSpec::Shape(s) if s.m() <= 1 && s.ks().iter().all(|&k| k == 0) => ordinal(s.m() as isize).ok(),
            _ => None,
        }
    }

    pub fn two_category(&self) -> Result<Fin2Category> {
        Ok(match self {
            ObjectSpec::Shape(s) => theta2_object(s)?,
            ObjectSpec::Ordinal(_) | ObjectSpec::Iso => {
                Fin2Category::from_category(&self.category().expect("locally discrete"))
            }
            ObjectSpec::Cell(j) => cell(*j)?,
            ObjectSpec::Sigma(inner) => suspend_category(&inner.category().ok_or_else(|| Error::Spec {
                spec: inner.to_string(),
                reason: "only 1-categories can be suspended".into(),
            })?),
        })
    }
}

impl FromStr for ObjectSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let fail = |reason: &str| Error::Spec {
            spec: s.to_string(),
            reason: reason.to_string(),
        };
        if let Some(rest) = t.strip_prefix("Sigma").or_else(|| t.strip_prefix('Σ')) {
            let inner: ObjectSpec = rest.parse()?;
            if inner.category().is_none() {
                return Err(fail("only 1-categories can be suspended"));
            }
            return Ok(ObjectSpec::Sigma(Box::new(inner)));
        }
        match t {
            "I" => return Ok(ObjectSpec::Iso),
            "C0" => return Ok(ObjectSpec::Cell(0)),
            "C1" => return Ok(ObjectSpec::Cell(1)),
            "C2" => return Ok(ObjectSpec::Cell(2)),
            _ => {}
        }
        if t.contains('|') {
            return t.parse().map(ObjectSpec::Shape).map_err(|e: theta2kit_core::Error| fail(&e.to_string()));
        }
        let m = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .and_then(|r| r.trim().parse::<usize>().ok())
            .ok_or_else(|| fail("expected [m|k1,…], [m], C0, C1, C2, I or Sigma <spec>"))?;
        Ok(ObjectSpec::Ordinal(m))
    }
}

impl fmt::Display for ObjectSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ObjectSpec::Shape(s) if s.m() == 0 => write!(f, "[0|]"),
            ObjectSpec::Shape(s) => write!(f, "{s}"),
            ObjectSpec::Ordinal(m) => write!(f, "[{m}]"),
            ObjectSpec::Cell(j) => write!(f, "C{j}"),
            ObjectSpec::Iso => write!(f, "I"),
            ObjectSpec::Sigma(inner) => write!(f, "Sigma {inner}"),
        }
    }
}
