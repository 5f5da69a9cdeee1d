//! The ambient polynomial ring `K[x_1, ..., x_n]`.
//!
//! The coefficient field never appears: every operation in this crate is
//! combinatorics on exponent vectors, so a ring is just an ordered list of
//! variable names.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::monomial::Monomial;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingContext {
    names: Vec<String>,
}

impl RingContext {
    /// Ring with `n` variables named `x1..xn`.
    pub fn new(n: usize) -> Result<Arc<Self>> {
        Self::with_names((1..=n).map(|i| format!("x{i}")))
    }

    /// Ring whose variables carry the given display names, in order.
    pub fn with_names<I, S>(names: I) -> Result<Arc<Self>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::InvalidRing("a ring needs at least one variable".into()));
        }
        let mut seen = HashSet::new();
        for name in &names {
            if name.is_empty() {
                return Err(Error::InvalidRing("empty variable name".into()));
            }
            if !seen.insert(name.as_str()) {
                return Err(Error::InvalidRing(format!("duplicate variable name `{name}`")));
            }
        }
        Ok(Arc::new(Self { names }))
    }

    /// Number of variables.
    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub(crate) fn check_var(&self, index: usize) -> Result<()> {
        if index < self.n() {
            Ok(())
        } else {
            Err(Error::VariableOutOfRange { index, n: self.n() })
        }
    }

    pub(crate) fn check_monomial<E: Exponent>(&self, m: &Monomial<E>) -> Result<()> {
        if m.nvars() == self.n() {
            Ok(())
        } else {
            Err(Error::ContextMismatch(format!(
                "monomial has {} exponents, ring has {} variables",
                m.nvars(),
                self.n()
            )))
        }
    }

    /// Renders `m` as `x2^6*x3^4*x4`, eliding `^1`; the unit monomial is `1`.
    pub fn format_monomial<E: Exponent>(&self, m: &Monomial<E>) -> String {
        self.format_monomial_with(m, "*")
    }

    /// Like [`format_monomial`](Self::format_monomial) with a custom factor separator.
    pub fn format_monomial_with<E: Exponent>(&self, m: &Monomial<E>, sep: &str) -> String {
        let factors: Vec<String> = m
            .exponents()
            .iter()
            .enumerate()
            .filter(|(_, e)| !e.is_zero())
            .map(|(i, &e)| {
                if e.is_one() {
                    self.names[i].clone()
                } else {
                    format!("{}^{}", self.names[i], e)
                }
            })
            .collect();
        if factors.is_empty() {
            "1".to_string()
        } else {
            factors.join(sep)
        }
    }
}

impl fmt::Display for RingContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K[{}]", self.names.join(", "))
    }
}

/// Two handles name the same ring if they share storage or compare equal.
pub(crate) fn same_ring(a: &Arc<RingContext>, b: &Arc<RingContext>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

pub(crate) fn ensure_same_ring(a: &Arc<RingContext>, b: &Arc<RingContext>) -> Result<()> {
    if same_ring(a, b) {
        Ok(())
    } else {
        Err(Error::ContextMismatch(format!("{a} vs {b}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_names() {
        let r = RingContext::new(3).unwrap();
        assert_eq!(r.names(), ["x1", "x2", "x3"]);
        assert_eq!(r.index_of("x2"), Some(1));
        assert_eq!(r.index_of("y"), None);
    }

    #[test]
    fn rejects_bad_rings() {
        assert!(RingContext::new(0).is_err());
        assert!(RingContext::with_names(["a", "b", "a"]).is_err());
        assert!(RingContext::with_names([""]).is_err());
    }

    #[test]
    fn formats_monomials() {
        let r = RingContext::new(8).unwrap();
        let v = Monomial::<u32>::from_exponents(vec![0, 6, 4, 1, 5, 5, 2, 13]);
        assert_eq!(r.format_monomial(&v), "x2^6*x3^4*x4*x5^5*x6^5*x7^2*x8^13");
        assert_eq!(r.format_monomial_with(&v, " "), "x2^6 x3^4 x4 x5^5 x6^5 x7^2 x8^13");
        assert_eq!(r.format_monomial(&Monomial::<u32>::one(8)), "1");
    }
}
