//! Witness monomials `v` with `P = (I : v)`.
//!
//! For a `P`-primary component `Q = ⟨x_{i_1}^{a_1}, ..., x_{i_k}^{a_k}⟩` of the
//! irredundant irreducible decomposition, the monomial
//!
//! ```text
//! v = x_{i_1}^{a_1 - 1} ... x_{i_k}^{a_k - 1} * x_{s_1}^{b_1} ... x_{s_{n-k}}^{b_{n-k}}
//! ```
//!
//! with `b_j >= max{ν_{s_j}(u) : u ∈ G(I)}` on the remaining variables always
//! satisfies `P = (I : v)`. Conversely, every witness `v` determines the
//! component `⟨x_{i_j}^{ν_{i_j}(v) + 1}⟩`.

mod symmetric;
mod uniqueness;

pub use symmetric::SymmetricPatternIdeal;
pub use uniqueness::{classify_uniqueness, Uniqueness};

use std::collections::BTreeMap;

use rand::Rng;

use crate::decomposition::{Decomposition, IrreducibleComponent};
use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::prime::PrimeSupport;
use crate::ring::ensure_same_ring;

/// A chosen `P`-primary component plus increments over the floors `b_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessSpec<E: Exponent = u32> {
    prime: PrimeSupport,
    component: IrreducibleComponent<E>,
    offsets: BTreeMap<usize, E>,
}

impl<E: Exponent> WitnessSpec<E> {
    /// Spec with all offsets zero, so every `b_j` sits exactly at its floor.
    pub fn new(component: IrreducibleComponent<E>) -> Self {
        Self { prime: component.prime(), component, offsets: BTreeMap::new() }
    }

    pub fn with_offsets(
        component: IrreducibleComponent<E>,
        offsets: impl IntoIterator<Item = (usize, E)>,
    ) -> Result<Self> {
        let mut spec = Self::new(component);
        for (var, offset) in offsets {
            spec.set_offset(var, offset)?;
        }
        Ok(spec)
    }

    /// Offsets may only be placed on variables outside the prime.
    pub fn set_offset(&mut self, var: usize, offset: E) -> Result<()> {
        self.prime.ring().check_var(var)?;
        if self.prime.contains_var(var) {
            return Err(Error::InvalidArgument(format!(
                "offset on {} which lies in {}",
                self.prime.ring().name(var),
                self.prime
            )));
        }
        self.offsets.insert(var, offset);
        Ok(())
    }

    pub fn prime(&self) -> &PrimeSupport {
        &self.prime
    }

    pub fn component(&self) -> &IrreducibleComponent<E> {
        &self.component
    }

    pub fn offsets(&self) -> &BTreeMap<usize, E> {
        &self.offsets
    }
}

/// Builds the witness for `spec` and checks it against the colon ideal.
pub fn witness_from_component<E: Exponent>(
    decomposition: &Decomposition<E>,
    spec: &WitnessSpec<E>,
) -> Result<Monomial<E>> {
    let ideal = decomposition.ideal();
    ensure_same_ring(ideal.ring(), spec.prime.ring())?;
    if !spec.component.has_support(&spec.prime) {
        return Err(Error::InvalidArgument(format!(
            "component {} is not {}-primary",
            spec.component, spec.prime
        )));
    }
    if !decomposition.contains_component(&spec.component) {
        return Err(Error::ComponentNotInDecomposition(spec.component.to_string()));
    }

    let floors = ideal.max_exponents();
    let mut exps = vec![E::zero(); ideal.ring().n()];
    for &(var, a) in spec.component.powers() {
        exps[var] = a - E::one();
    }
    for var in spec.prime.complement() {
        let offset = spec.offsets.get(&var).copied().unwrap_or_else(E::zero);
        exps[var] = floors[var].checked_add(&offset).ok_or(Error::ExponentOverflow)?;
    }
    let v = Monomial::from_exponents(exps);

    if !verify_witness(ideal, &spec.prime, &v)? {
        return Err(Error::Inconsistency(format!(
            "constructed witness {} does not give {}",
            ideal.ring().format_monomial(&v),
            spec.prime
        )));
    }
    Ok(v)
}

/// `(I : v) = P`.
pub fn verify_witness<E: Exponent>(
    ideal: &MonomialIdeal<E>,
    prime: &PrimeSupport,
    v: &Monomial<E>,
) -> Result<bool> {
    ensure_same_ring(ideal.ring(), prime.ring())?;
    Ok(ideal.colon_monomial(v)? == prime.to_ideal())
}

/// Recovers the component `⟨x_{i_j}^{ν_{i_j}(v) + 1}⟩` named by a witness.
pub fn component_from_witness<E: Exponent>(
    decomposition: &Decomposition<E>,
    prime: &PrimeSupport,
    v: &Monomial<E>,
) -> Result<IrreducibleComponent<E>> {
    let ring = decomposition.ideal().ring();
    if !verify_witness(decomposition.ideal(), prime, v)? {
        return Err(Error::InvalidWitness(format!(
            "({} : {}) is not {}",
            decomposition.ideal(),
            ring.format_monomial(v),
            prime
        )));
    }
    let powers = prime
        .vars()
        .iter()
        .map(|&var| {
            v.exponent(var)
                .checked_add(&E::one())
                .map(|e| (var, e))
                .ok_or(Error::ExponentOverflow)
        })
        .collect::<Result<Vec<_>>>()?;
    let component = IrreducibleComponent::new(ring.clone(), powers)?;
    if !decomposition.contains_component(&component) {
        return Err(Error::Inconsistency(format!(
            "witness {} points at {}, which is not a component",
            ring.format_monomial(v),
            component
        )));
    }
    Ok(component)
}

/// For squarefree `I`, a witness never involves the variables of `P`.
///
/// Returns `Ok(true)` when that holds; a witness that does involve them is
/// reported as an [`Error::Inconsistency`].
pub fn squarefree_witness_check<E: Exponent>(
    ideal: &MonomialIdeal<E>,
    prime: &PrimeSupport,
    v: &Monomial<E>,
) -> Result<bool> {
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    if !verify_witness(ideal, prime, v)? {
        return Err(Error::InvalidWitness(format!(
            "({} : {}) is not {}",
            ideal,
            ideal.ring().format_monomial(v),
            prime
        )));
    }
    if let Some(&var) = prime.vars().iter().find(|&&var| !v.exponent(var).is_zero()) {
        return Err(Error::Inconsistency(format!(
            "witness {} of a squarefree ideal involves {}",
            ideal.ring().format_monomial(v),
            ideal.ring().name(var)
        )));
    }
    Ok(true)
}

/// Uniform offsets in `0..=max` for every variable outside `prime`.
pub fn random_offsets<E: Exponent, R: Rng + ?Sized>(
    rng: &mut R,
    prime: &PrimeSupport,
    max: E,
) -> BTreeMap<usize, E> {
    let max = max.to_u64_saturating();
    prime
        .complement()
        .into_iter()
        .map(|var| {
            let off = rng.gen_range(0..=max);
            (var, E::from_u64(off).expect("bounded by max"))
        })
        .collect()
}
