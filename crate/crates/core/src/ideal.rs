//! Monomial ideals held by their minimal generating set `G(I)`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::monomial::Monomial;
use crate::ring::{ensure_same_ring, RingContext};

/// A monomial ideal in canonical form.
///
/// Generators are minimal under divisibility and sorted in descending
/// lexicographic order of exponent vectors (`x1^4` before `x2^7`), so two ideals are equal exactly when their generator lists are. The zero ideal
/// has no generators and the unit ideal has the single generator `1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal<E: Exponent = u32> {
    ring: Arc<RingContext>,
    gens: Vec<Monomial<E>>,
}

/// Reduce to the elements minimal under divisibility, in descending lexicographic order.
pub fn minimize<E: Exponent>(mut gens: Vec<Monomial<E>>) -> Vec<Monomial<E>> {
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    gens.dedup();
    let mut kept: Vec<Monomial<E>> = Vec::with_capacity(gens.len());
    for g in gens {
        // anything dividing g has degree <= deg(g) and is already in `kept`
        if !kept.iter().any(|k| k.divides_unchecked(&g)) {
            kept.push(g);
        }
    }
    kept.sort_by(|a, b| b.cmp(a));
    kept
}

impl<E: Exponent> MonomialIdeal<E> {
    /// The ideal generated by `gens`, minimized.
    pub fn new(
        ring: Arc<RingContext>,
        gens: impl IntoIterator<Item = Monomial<E>>,
    ) -> Result<Self> {
        let gens: Vec<_> = gens.into_iter().collect();
        for g in &gens {
            ring.check_monomial(g)?;
        }
        Ok(Self::from_parts(ring, gens))
    }

    pub(crate) fn from_parts(ring: Arc<RingContext>, gens: Vec<Monomial<E>>) -> Self {
        Self { ring, gens: minimize(gens) }
    }

    pub fn zero(ring: Arc<RingContext>) -> Self {
        Self { ring, gens: Vec::new() }
    }

    pub fn unit(ring: Arc<RingContext>) -> Self {
        let n = ring.n();
        Self { ring, gens: vec![Monomial::one(n)] }
    }

    /// The monomial prime `⟨x_i : i ∈ vars⟩`.
    pub fn prime(ring: Arc<RingContext>, vars: impl IntoIterator<Item = usize>) -> Result<Self> {
        let n = ring.n();
        let gens = vars
            .into_iter()
            .map(|v| Monomial::var_power(n, v, E::one()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_parts(ring, gens))
    }

    pub fn ring(&self) -> &Arc<RingContext> {
        &self.ring
    }

    /// `G(I)` in canonical order.
    pub fn generators(&self) -> &[Monomial<E>] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    /// Nonzero and not the unit ideal.
    pub fn is_proper_nonzero(&self) -> bool {
        !self.is_zero() && !self.is_unit()
    }

    pub(crate) fn require_proper_nonzero(&self) -> Result<()> {
        if self.is_zero() {
            Err(Error::ZeroIdeal)
        } else if self.is_unit() {
            Err(Error::UnitIdeal)
        } else {
            Ok(())
        }
    }

    /// `max{ν_j(u) : u ∈ G(I)}` for every variable `j` (zero for absent variables).
    pub fn max_exponents(&self) -> Vec<E> {
        let mut out = vec![E::zero(); self.ring.n()];
        for g in &self.gens {
            for (o, &e) in out.iter_mut().zip(g.exponents()) {
                *o = (*o).max(e);
            }
        }
        out
    }

    /// Membership: some generator divides `m`.
    pub fn contains(&self, m: &Monomial<E>) -> Result<bool> {
        self.ring.check_monomial(m)?;
        Ok(self.contains_unchecked(m))
    }

    pub(crate) fn contains_unchecked(&self, m: &Monomial<E>) -> bool {
        self.gens.iter().any(|g| g.divides_unchecked(m))
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &Self) -> Result<bool> {
        ensure_same_ring(&self.ring, &other.ring)?;
        Ok(other.gens.iter().all(|g| self.contains_unchecked(g)))
    }

    /// `(I : v) = ⟨u / gcd(u, v) : u ∈ G(I)⟩`.
    pub fn colon_monomial(&self, v: &Monomial<E>) -> Result<Self> {
        self.ring.check_monomial(v)?;
        Ok(self.colon_monomial_unchecked(v))
    }

    pub(crate) fn colon_monomial_unchecked(&self, v: &Monomial<E>) -> Self {
        Self::from_parts(
            self.ring.clone(),
            self.gens.iter().map(|g| g.colon_unchecked(v)).collect(),
        )
    }

    /// `(I : J) = ∩_{v ∈ G(J)} (I : v)`.
    pub fn colon_ideal(&self, other: &Self) -> Result<Self> {
        ensure_same_ring(&self.ring, &other.ring)?;
        if other.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        let mut parts = other.gens.iter().map(|v| self.colon_monomial_unchecked(v));
        let first = parts.next().expect("nonzero ideal has a generator");
        Ok(parts.fold(first, |acc, q| acc.intersect_unchecked(&q)))
    }

    /// `I ∩ J = ⟨lcm(u, w) : u ∈ G(I), w ∈ G(J)⟩`.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        ensure_same_ring(&self.ring, &other.ring)?;
        Ok(self.intersect_unchecked(other))
    }

    pub(crate) fn intersect_unchecked(&self, other: &Self) -> Self {
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for u in &self.gens {
            for w in &other.gens {
                gens.push(u.lcm_unchecked(w));
            }
        }
        Self::from_parts(self.ring.clone(), gens)
    }

    /// `I + J`.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        ensure_same_ring(&self.ring, &other.ring)?;
        Ok(Self::from_parts(
            self.ring.clone(),
            self.gens.iter().chain(&other.gens).cloned().collect(),
        ))
    }

    /// Replace every generator by its base and minimize.
    pub fn radical(&self) -> Self {
        Self::from_parts(self.ring.clone(), self.gens.iter().map(Monomial::base).collect())
    }

    /// Every generator has all exponents at most one.
    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// Comma-separated generators in the input syntax; `0` for the zero ideal.
    pub fn generators_text(&self) -> String {
        if self.gens.is_empty() {
            return "0".to_string();
        }
        self.gens
            .iter()
            .map(|g| self.ring.format_monomial(g))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

impl<E: Exponent> fmt::Display for MonomialIdeal<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨{}⟩", self.generators_text())
    }
}

impl<E: Exponent> fmt::Debug for MonomialIdeal<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonomialIdeal{}", self)
    }
}
