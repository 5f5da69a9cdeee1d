//! Ideals of Borel type.
//!
//! `I` is of Borel type when `I : x_i^∞ = I : ⟨x_1, ..., x_i⟩^∞` for every `i`.
//! Detection uses the equivalent exchange condition: for every `u ∈ G(I)` and
//! `j < i`, some `x_j^t * (u / x_i^{ν_i(u)})` lies in `I`. It is enough to try
//! `t = max{ν_j(g) : g ∈ G(I)}`, because a generator dividing
//! `x_j^t * w` for some `t` also divides it at that bound.

use std::collections::VecDeque;

use crate::decomposition::{Decomposition, IrreducibleComponent};
use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::prime::PrimeSupport;
use crate::ring::ensure_same_ring;
use crate::witness::verify_witness;

/// A generator `u` and indices `j < i` for which no power of `x_j` times
/// `u / x_i^{ν_i(u)}` lands in the ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BorelViolation<E: Exponent = u32> {
    pub generator: Monomial<E>,
    /// Variable stripped from the generator (0-based).
    pub i: usize,
    /// Variable whose powers were tried (0-based).
    pub j: usize,
    /// Largest power of `x_j` that needs trying.
    pub bound: E,
}

impl<E: Exponent> BorelViolation<E> {
    /// `x_j^bound * (u / x_i^{ν_i(u)})`.
    pub fn probe(&self) -> Monomial<E> {
        self.generator.clone().with_exponent(self.i, E::zero()).with_exponent(
            self.j,
            self.generator.exponent(self.j).saturating_add(self.bound),
        )
    }

    /// Re-checks that the probe monomial is outside `ideal`.
    pub fn recheck(&self, ideal: &MonomialIdeal<E>) -> Result<bool> {
        Ok(!ideal.contains(&self.probe())?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BorelReport<E: Exponent = u32> {
    /// Every associated prime is of the form `⟨x_1, ..., x_j⟩`.
    BorelType { associated_primes: Vec<PrimeSupport> },
    NotBorelType { violation: BorelViolation<E> },
}

impl<E: Exponent> BorelReport<E> {
    pub fn is_borel_type(&self) -> bool {
        matches!(self, BorelReport::BorelType { .. })
    }
}

fn find_violation<E: Exponent>(ideal: &MonomialIdeal<E>) -> Option<BorelViolation<E>> {
    let bounds = ideal.max_exponents();
    for u in ideal.generators() {
        for i in u.support() {
            let stripped = u.clone().with_exponent(i, E::zero());
            for (j, &bound) in bounds.iter().enumerate().take(i) {
                let probe = stripped
                    .clone()
                    .with_exponent(j, stripped.exponent(j).saturating_add(bound));
                if !ideal.contains_unchecked(&probe) {
                    return Some(BorelViolation { generator: u.clone(), i, j, bound });
                }
            }
        }
    }
    None
}

/// Decides Borel type by the exchange condition on generators.
///
/// Positive answers carry `Ass(I)`, which is checked to consist of prefix
/// primes. The zero and unit ideals are reported as Borel type with no primes.
pub fn is_borel_type<E: Exponent>(ideal: &MonomialIdeal<E>) -> Result<BorelReport<E>> {
    if let Some(violation) = find_violation(ideal) {
        return Ok(BorelReport::NotBorelType { violation });
    }
    if !ideal.is_proper_nonzero() {
        return Ok(BorelReport::BorelType { associated_primes: Vec::new() });
    }
    let associated_primes = Decomposition::compute(ideal)?.associated_primes();
    if let Some(p) = associated_primes.iter().find(|p| !p.is_prefix()) {
        return Err(Error::Inconsistency(format!(
            "Borel-type ideal {ideal} has non-prefix associated prime {p}"
        )));
    }
    Ok(BorelReport::BorelType { associated_primes })
}

/// Decides Borel type from the saturation definition directly.
pub fn is_borel_type_by_saturation<E: Exponent>(ideal: &MonomialIdeal<E>) -> Result<bool> {
    let ring = ideal.ring();
    for i in 0..ring.n() {
        let single = MonomialIdeal::prime(ring.clone(), [i])?;
        let prefix = MonomialIdeal::prime(ring.clone(), 0..=i)?;
        if saturate(ideal, &single)? != saturate(ideal, &prefix)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `I : J^∞`, the stable value of repeated colon by `J`.
pub fn saturate<E: Exponent>(ideal: &MonomialIdeal<E>, by: &MonomialIdeal<E>) -> Result<MonomialIdeal<E>> {
    ensure_same_ring(ideal.ring(), by.ring())?;
    if by.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let mut current = ideal.clone();
    loop {
        let next = current.colon_ideal(by)?;
        if next == current {
            return Ok(current);
        }
        current = next;
    }
}

/// Witness `x_1^{a_1-1} ... x_k^{a_k-1} * x_{k+1}^{b}` for a prefix prime of a
/// Borel-type ideal, with `b = max ν_{k+1}` over `G(I)`. For `k = n` the last
/// factor is absent.
pub fn borel_witness<E: Exponent>(
    decomposition: &Decomposition<E>,
    prime: &PrimeSupport,
    component: &IrreducibleComponent<E>,
) -> Result<Monomial<E>> {
    borel_witness_with_offset(decomposition, prime, component, E::zero())
}

/// [`borel_witness`] with `b` raised by `offset`.
pub fn borel_witness_with_offset<E: Exponent>(
    decomposition: &Decomposition<E>,
    prime: &PrimeSupport,
    component: &IrreducibleComponent<E>,
    offset: E,
) -> Result<Monomial<E>> {
    let ideal = decomposition.ideal();
    ensure_same_ring(ideal.ring(), prime.ring())?;
    if find_violation(ideal).is_some() {
        return Err(Error::NotBorelType);
    }
    if !prime.is_prefix() {
        return Err(Error::InvalidArgument(format!("{prime} is not a prefix prime")));
    }
    if !component.has_support(prime) {
        return Err(Error::InvalidArgument(format!(
            "component {component} does not have full support on {prime}"
        )));
    }
    if !decomposition.contains_component(component) {
        return Err(Error::ComponentNotInDecomposition(component.to_string()));
    }

    let n = ideal.ring().n();
    let k = prime.k();
    let mut exps = vec![E::zero(); n];
    for &(var, a) in component.powers() {
        exps[var] = a - E::one();
    }
    if k < n {
        let floor = ideal.max_exponents()[k];
        exps[k] = floor.checked_add(&offset).ok_or(Error::ExponentOverflow)?;
    }
    let v = Monomial::from_exponents(exps);
    if !verify_witness(ideal, prime, &v)? {
        return Err(Error::Inconsistency(format!(
            "Borel witness {} does not give {prime}",
            ideal.ring().format_monomial(&v)
        )));
    }
    Ok(v)
}

/// Smallest ideal containing `ideal` that is closed under the exchanges
/// `u ↦ u * x_j / x_i` for `j < i` and `x_i | u`. The result is of Borel type.
pub fn exchange_closure<E: Exponent>(ideal: &MonomialIdeal<E>) -> MonomialIdeal<E> {
    let mut gens: Vec<Monomial<E>> = ideal.generators().to_vec();
    let mut queue: VecDeque<Monomial<E>> = gens.iter().cloned().collect();
    while let Some(m) = queue.pop_front() {
        for i in m.support() {
            for j in 0..i {
                let moved = m
                    .clone()
                    .with_exponent(i, m.exponent(i) - E::one())
                    .with_exponent(j, m.exponent(j) + E::one());
                // multiples of a known generator are reached through that generator's moves
                if !gens.iter().any(|g| g.divides_unchecked(&moved)) {
                    gens.push(moved.clone());
                    queue.push_back(moved);
                }
            }
        }
    }
    MonomialIdeal::from_parts(ideal.ring().clone(), gens)
}
