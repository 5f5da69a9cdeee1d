use crate::decomposition::Decomposition;
use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::monomial::Monomial;
use crate::prime::PrimeSupport;
use crate::ring::ensure_same_ring;

use super::{verify_witness, witness_from_component, WitnessSpec};

/// Whether `P = (I : v)` pins down `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Uniqueness<E: Exponent = u32> {
    /// `P` is maximal with a single `P`-primary component; `witness` is the only `v`.
    Unique { witness: Monomial<E> },
    /// Two distinct verified witnesses.
    NonUnique { first: Monomial<E>, second: Monomial<E> },
}

impl<E: Exponent> Uniqueness<E> {
    pub fn is_unique(&self) -> bool {
        matches!(self, Uniqueness::Unique { .. })
    }
}

/// The witness for `P` is unique iff `P = ⟨x_1, ..., x_n⟩` and `P` has exactly
/// one primary component.
///
/// Otherwise two witnesses are produced: for a non-maximal prime, the default
/// witness and the same witness with one more power of the first variable
/// outside `P`; for a maximal prime, the witnesses of its first two components.
pub fn classify_uniqueness<E: Exponent>(
    decomposition: &Decomposition<E>,
    prime: &PrimeSupport,
) -> Result<Uniqueness<E>> {
    ensure_same_ring(decomposition.ideal().ring(), prime.ring())?;
    let components = decomposition.components_for(prime)?;

    let verdict = if !prime.is_maximal() {
        let component = components[0].clone();
        let first = witness_from_component(decomposition, &WitnessSpec::new(component.clone()))?;
        let bump = prime.complement()[0];
        let spec = WitnessSpec::with_offsets(component, [(bump, E::one())])?;
        let second = witness_from_component(decomposition, &spec)?;
        Uniqueness::NonUnique { first, second }
    } else if components.len() > 1 {
        let first = witness_from_component(decomposition, &WitnessSpec::new(components[0].clone()))?;
        let second = witness_from_component(decomposition, &WitnessSpec::new(components[1].clone()))?;
        Uniqueness::NonUnique { first, second }
    } else {
        let witness = witness_from_component(decomposition, &WitnessSpec::new(components[0].clone()))?;
        Uniqueness::Unique { witness }
    };

    if let Uniqueness::NonUnique { first, second } = &verdict {
        let ideal = decomposition.ideal();
        if first == second || !verify_witness(ideal, prime, first)? || !verify_witness(ideal, prime, second)? {
            return Err(Error::Inconsistency(format!(
                "non-uniqueness certificate for {prime} failed to verify"
            )));
        }
    }
    Ok(verdict)
}
