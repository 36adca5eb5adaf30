use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::{Monomial, MonomialOrder};

/// A polynomial ring `k[x_1, ..., x_n]` with a fixed monomial order.
///
/// Rings compare structurally: two rings built from the same names, field
/// and order are the same ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyRing {
    field: Field,
    names: Vec<String>,
    order: MonomialOrder,
}

impl PolyRing {
    pub fn new<S: AsRef<str>>(field: Field, names: &[S], order: MonomialOrder) -> Result<Arc<PolyRing>> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, n) in names.iter().enumerate() {
            if !is_identifier(n) {
                return Err(Error::InvalidRing(format!("`{n}` is not a valid variable name")));
            }
            if names[..i].contains(n) {
                return Err(Error::InvalidRing(format!("duplicate variable `{n}`")));
            }
        }
        if let MonomialOrder::Elimination { block } = order {
            if block > names.len() {
                return Err(Error::InvalidRing(format!(
                    "elimination block {block} exceeds {} variables",
                    names.len()
                )));
            }
        }
        Ok(Arc::new(PolyRing { field, names, order }))
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn require_var(&self, name: &str) -> Result<usize> {
        self.var_index(name).ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn one_monomial(&self) -> Monomial {
        Monomial::one(self.nvars())
    }

    /// Same variables and field, another order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<Arc<PolyRing>> {
        PolyRing::new(self.field, &self.names, order)
    }

    /// Identifier used in diagnostics and cache keys, e.g. `F101[x,y] degrevlex`.
    pub fn id(&self) -> String {
        self.to_string()
    }

    pub fn check_same(&self, other: &PolyRing) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch { left: self.id(), right: other.id() })
        }
    }
}

impl fmt::Display for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}] {}", self.field, self.names.join(","), self.order.name())
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}
