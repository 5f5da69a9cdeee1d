use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::ideal::MonomialIdeal;
use crate::ring::RingContext;

/// A monomial prime `⟨x_{i_1}, ..., x_{i_k}⟩`, stored as its sorted variable set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PrimeSupport {
    ring: Arc<RingContext>,
    vars: Vec<usize>,
}

impl PrimeSupport {
    pub fn new(ring: Arc<RingContext>, vars: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut vars: Vec<usize> = vars.into_iter().collect();
        vars.sort_unstable();
        vars.dedup();
        if vars.is_empty() {
            return Err(Error::InvalidArgument("a prime needs at least one variable".into()));
        }
        for &v in &vars {
            ring.check_var(v)?;
        }
        Ok(Self { ring, vars })
    }

    /// `⟨x_1, ..., x_n⟩`.
    pub fn maximal(ring: Arc<RingContext>) -> Self {
        let vars = (0..ring.n()).collect();
        Self { ring, vars }
    }

    pub fn ring(&self) -> &Arc<RingContext> {
        &self.ring
    }

    pub fn vars(&self) -> &[usize] {
        &self.vars
    }

    /// Number of generators `k`.
    pub fn k(&self) -> usize {
        self.vars.len()
    }

    pub fn contains_var(&self, var: usize) -> bool {
        self.vars.binary_search(&var).is_ok()
    }

    /// Variables outside the prime, ascending.
    pub fn complement(&self) -> Vec<usize> {
        (0..self.ring.n()).filter(|v| !self.contains_var(*v)).collect()
    }

    /// All variables of the ring.
    pub fn is_maximal(&self) -> bool {
        self.vars.len() == self.ring.n()
    }

    /// Of the form `⟨x_1, ..., x_j⟩`.
    pub fn is_prefix(&self) -> bool {
        self.vars.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn to_ideal<E: Exponent>(&self) -> MonomialIdeal<E> {
        MonomialIdeal::prime(self.ring.clone(), self.vars.iter().copied())
            .expect("prime variables are range-checked")
    }

    /// Reads a monomial prime back from an ideal, if it is one.
    pub fn from_ideal<E: Exponent>(ideal: &MonomialIdeal<E>) -> Option<Self> {
        let mut vars = Vec::with_capacity(ideal.len());
        for g in ideal.generators() {
            if !(g.is_pure_power() && g.is_squarefree()) {
                return None;
            }
            vars.push(g.support()[0]);
        }
        Self::new(ideal.ring().clone(), vars).ok()
    }

    pub fn names(&self) -> Vec<&str> {
        self.vars.iter().map(|&v| self.ring.name(v)).collect()
    }
}

impl Ord for PrimeSupport {
    fn cmp(&self, other: &Self) -> Ordering {
        self.vars.cmp(&other.vars)
    }
}

impl PartialOrd for PrimeSupport {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PrimeSupport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨{}⟩", self.names().join(", "))
    }
}

impl fmt::Debug for PrimeSupport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PrimeSupport{}", self)
    }
}
