//! Monomials as exponent vectors.

use std::fmt;

use crate::error::{Error, Result};
use crate::exponent::Exponent;

/// A monomial `x^a`, stored as its index `a`.
///
/// The derived ordering is lexicographic on the exponent vector, which is the
/// canonical generator order used by [`MonomialIdeal`](crate::MonomialIdeal).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial<E: Exponent = u32> {
    exps: Vec<E>,
}

impl<E: Exponent> Monomial<E> {
    pub fn from_exponents(exps: Vec<E>) -> Self {
        Self { exps }
    }

    /// The unit monomial `1` in `n` variables.
    pub fn one(n: usize) -> Self {
        Self { exps: vec![E::zero(); n] }
    }

    /// `x_var^power` in `n` variables.
    pub fn var_power(n: usize, var: usize, power: E) -> Result<Self> {
        if var >= n {
            return Err(Error::VariableOutOfRange { index: var, n });
        }
        let mut m = Self::one(n);
        m.exps[var] = power;
        Ok(m)
    }

    /// Squarefree product of the given variables.
    pub fn squarefree(n: usize, vars: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut m = Self::one(n);
        for v in vars {
            if v >= n {
                return Err(Error::VariableOutOfRange { index: v, n });
            }
            m.exps[v] = E::one();
        }
        Ok(m)
    }

    pub fn exponents(&self) -> &[E] {
        &self.exps
    }

    /// `ν_i(u)`: the exponent of variable `i`.
    pub fn exponent(&self, var: usize) -> E {
        self.exps[var]
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|e| e.is_zero())
    }

    /// Total degree, widened to `u64`.
    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|e| e.to_u64_saturating()).sum()
    }

    /// The floor of `u`: indices of the variables dividing it.
    pub fn support(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, e)| !e.is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    /// The squarefree monomial on the support.
    pub fn base(&self) -> Self {
        Self {
            exps: self
                .exps
                .iter()
                .map(|e| if e.is_zero() { E::zero() } else { E::one() })
                .collect(),
        }
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= E::one())
    }

    /// True for `x_i^a` with `a >= 1`.
    pub fn is_pure_power(&self) -> bool {
        self.exps.iter().filter(|e| !e.is_zero()).count() == 1
    }

    fn check_len(&self, other: &Self) -> Result<()> {
        if self.exps.len() == other.exps.len() {
            Ok(())
        } else {
            Err(Error::ContextMismatch(format!(
                "monomials in {} and {} variables",
                self.exps.len(),
                other.exps.len()
            )))
        }
    }

    /// `self | other`.
    pub fn divides(&self, other: &Self) -> Result<bool> {
        self.check_len(other)?;
        Ok(self.divides_unchecked(other))
    }

    pub fn lcm(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        Ok(self.lcm_unchecked(other))
    }

    pub fn gcd(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        Ok(self.zip_with(other, |a, b| a.min(b)))
    }

    /// Product, failing on exponent overflow.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        self.mul_unchecked(other)
    }

    /// `u / gcd(u, v)`: the generator of `(⟨u⟩ : v)`.
    pub fn colon(&self, v: &Self) -> Result<Self> {
        self.check_len(v)?;
        Ok(self.colon_unchecked(v))
    }

    /// Exact division `self / other`, if `other` divides `self`.
    pub fn div(&self, other: &Self) -> Result<Option<Self>> {
        self.check_len(other)?;
        if !other.divides_unchecked(self) {
            return Ok(None);
        }
        Ok(Some(self.colon_unchecked(other)))
    }

    pub(crate) fn divides_unchecked(&self, other: &Self) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub(crate) fn lcm_unchecked(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a.max(b))
    }

    pub(crate) fn colon_unchecked(&self, v: &Self) -> Self {
        self.zip_with(v, |a, b| a.saturating_sub(b))
    }

    pub(crate) fn mul_unchecked(&self, other: &Self) -> Result<Self> {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.checked_add(&b).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<E>>>()?;
        Ok(Self { exps })
    }

    pub(crate) fn with_exponent(mut self, var: usize, e: E) -> Self {
        self.exps[var] = e;
        self
    }

    fn zip_with(&self, other: &Self, f: impl Fn(E, E) -> E) -> Self {
        Self {
            exps: self.exps.iter().zip(&other.exps).map(|(&a, &b)| f(a, b)).collect(),
        }
    }
}

impl<E: Exponent> fmt::Debug for Monomial<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^{:?}", self.exps)
    }
}
