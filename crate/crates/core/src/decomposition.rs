//! Irredundant irreducible decomposition and associated primes.
//!
//! Every monomial ideal is a unique irredundant intersection of ideals
//! generated by pure powers of variables. The decomposition is computed by
//! splitting a mixed generator `u = x_i^a * u'` (with `u'` coprime to `x_i`)
//! through the distributive law
//!
//! ```text
//! rest + ⟨u⟩ = (rest + ⟨x_i^a⟩) ∩ (rest + ⟨u'⟩)
//! ```
//!
//! until only pure powers remain, then discarding components that contain
//! another one. For irreducible monomial ideals `Q ⊇ ∩ Q_j` holds exactly
//! when `Q ⊇ Q_j` for some `j`, so the pairwise check yields an irredundant
//! result. Uniqueness makes the split order irrelevant to the output.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::ideal::{minimize, MonomialIdeal};
use crate::monomial::Monomial;
use crate::prime::PrimeSupport;
use crate::ring::{ensure_same_ring, RingContext};

/// A pure-power ideal `⟨x_{i_1}^{a_1}, ..., x_{i_k}^{a_k}⟩`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IrreducibleComponent<E: Exponent = u32> {
    ring: Arc<RingContext>,
    /// `(variable, exponent)` sorted by variable, exponents positive.
    powers: Vec<(usize, E)>,
}

impl<E: Exponent> IrreducibleComponent<E> {
    pub fn new(ring: Arc<RingContext>, powers: impl IntoIterator<Item = (usize, E)>) -> Result<Self> {
        let mut powers: Vec<(usize, E)> = powers.into_iter().collect();
        powers.sort_by_key(|&(v, _)| v);
        if powers.is_empty() {
            return Err(Error::InvalidArgument("an irreducible component needs a generator".into()));
        }
        for w in powers.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::InvalidArgument(format!(
                    "variable {} appears twice in a component",
                    ring.name(w[0].0)
                )));
            }
        }
        for &(v, e) in &powers {
            ring.check_var(v)?;
            if e.is_zero() {
                return Err(Error::InvalidArgument("component exponents must be positive".into()));
            }
        }
        Ok(Self { ring, powers })
    }

    /// Component from a dense vector where zero marks an absent variable.
    fn from_dense(ring: Arc<RingContext>, dense: &[E]) -> Self {
        let powers = dense
            .iter()
            .enumerate()
            .filter(|(_, e)| !e.is_zero())
            .map(|(v, &e)| (v, e))
            .collect();
        Self { ring, powers }
    }

    pub fn ring(&self) -> &Arc<RingContext> {
        &self.ring
    }

    pub fn powers(&self) -> &[(usize, E)] {
        &self.powers
    }

    pub fn support(&self) -> Vec<usize> {
        self.powers.iter().map(|&(v, _)| v).collect()
    }

    /// Exponent of `var` among the generators, if present.
    pub fn exponent(&self, var: usize) -> Option<E> {
        self.powers
            .binary_search_by_key(&var, |&(v, _)| v)
            .ok()
            .map(|i| self.powers[i].1)
    }

    /// The radical `⟨x_{i_1}, ..., x_{i_k}⟩`.
    pub fn prime(&self) -> PrimeSupport {
        PrimeSupport::new(self.ring.clone(), self.support()).expect("component support is valid")
    }

    pub fn has_support(&self, prime: &PrimeSupport) -> bool {
        self.powers.len() == prime.k() && self.powers.iter().zip(prime.vars()).all(|(p, &v)| p.0 == v)
    }

    pub fn to_ideal(&self) -> MonomialIdeal<E> {
        let n = self.ring.n();
        let gens = self
            .powers
            .iter()
            .map(|&(v, e)| Monomial::var_power(n, v, e).expect("range-checked"))
            .collect();
        MonomialIdeal::from_parts(self.ring.clone(), gens)
    }

    /// `other ⊆ self`, decided on the exponent data alone.
    pub fn contains(&self, other: &Self) -> bool {
        other.powers.iter().all(|&(v, b)| self.exponent(v).is_some_and(|a| a <= b))
    }

    fn exponents(&self) -> impl Iterator<Item = E> + '_ {
        self.powers.iter().map(|&(_, e)| e)
    }
}

/// Canonical order: by support, then by exponents in descending lexicographic order.
impl<E: Exponent> Ord for IrreducibleComponent<E> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.support()
            .cmp(&other.support())
            .then_with(|| other.exponents().cmp(self.exponents()))
    }
}

impl<E: Exponent> PartialOrd for IrreducibleComponent<E> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<E: Exponent> fmt::Display for IrreducibleComponent<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self
            .powers
            .iter()
            .map(|&(v, e)| {
                if e.is_one() {
                    self.ring.name(v).to_string()
                } else {
                    format!("{}^{}", self.ring.name(v), e)
                }
            })
            .collect();
        write!(f, "⟨{}⟩", gens.join(", "))
    }
}

impl<E: Exponent> fmt::Debug for IrreducibleComponent<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IrreducibleComponent{}", self)
    }
}

/// `I = Q_1 ∩ ... ∩ Q_r`, irredundant, components in canonical order.
#[derive(Clone, PartialEq, Eq)]
pub struct Decomposition<E: Exponent = u32> {
    ideal: MonomialIdeal<E>,
    components: Vec<IrreducibleComponent<E>>,
}

impl<E: Exponent> Decomposition<E> {
    /// Computes the unique irredundant irreducible decomposition of a proper nonzero ideal.
    pub fn compute(ideal: &MonomialIdeal<E>) -> Result<Self> {
        ideal.require_proper_nonzero()?;
        let mut splitter = Splitter::default();
        let dense = splitter.decompose(ideal.generators().to_vec());
        let mut components: Vec<_> = dense
            .iter()
            .map(|d| IrreducibleComponent::from_dense(ideal.ring().clone(), d))
            .collect();
        components.sort();
        Ok(Self { ideal: ideal.clone(), components })
    }

    pub fn ideal(&self) -> &MonomialIdeal<E> {
        &self.ideal
    }

    pub fn components(&self) -> &[IrreducibleComponent<E>] {
        &self.components
    }

    /// Number of components `r`.
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Radicals of the components, deduplicated, in canonical order.
    pub fn associated_primes(&self) -> Vec<PrimeSupport> {
        let mut primes: Vec<_> = self.components.iter().map(IrreducibleComponent::prime).collect();
        primes.sort();
        primes.dedup();
        primes
    }

    pub fn is_associated(&self, prime: &PrimeSupport) -> bool {
        self.components.iter().any(|c| c.has_support(prime))
    }

    /// The `P`-primary components, in canonical order.
    pub fn components_for(&self, prime: &PrimeSupport) -> Result<Vec<&IrreducibleComponent<E>>> {
        ensure_same_ring(self.ideal.ring(), prime.ring())?;
        let found: Vec<_> = self.components.iter().filter(|c| c.has_support(prime)).collect();
        if found.is_empty() {
            Err(Error::NotAssociated(prime.to_string()))
        } else {
            Ok(found)
        }
    }

    pub fn contains_component(&self, component: &IrreducibleComponent<E>) -> bool {
        self.components.iter().any(|c| c == component)
    }

    /// Intersection of all components.
    pub fn recombine(&self) -> MonomialIdeal<E> {
        intersect_all(self.ideal.ring(), self.components.iter())
    }

    /// Checks that no component contains the intersection of the others.
    pub fn is_irredundant(&self) -> bool {
        (0..self.components.len()).all(|i| {
            let others = intersect_all(
                self.ideal.ring(),
                self.components.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, c)| c),
            );
            !self.components[i]
                .to_ideal()
                .contains_ideal(&others)
                .expect("same ring")
        })
    }
}

impl<E: Exponent> fmt::Debug for Decomposition<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Decomposition")
            .field("ideal", &self.ideal)
            .field("components", &self.components)
            .finish()
    }
}

fn intersect_all<'a, E: Exponent>(
    ring: &Arc<RingContext>,
    components: impl Iterator<Item = &'a IrreducibleComponent<E>>,
) -> MonomialIdeal<E> {
    components.fold(MonomialIdeal::unit(ring.clone()), |acc, c| {
        acc.intersect_unchecked(&c.to_ideal())
    })
}

/// Shorthand for [`Decomposition::compute`].
pub fn irreducible_decomposition<E: Exponent>(ideal: &MonomialIdeal<E>) -> Result<Decomposition<E>> {
    Decomposition::compute(ideal)
}

/// `Ass(I)`: the radicals of the irreducible components.
pub fn associated_primes<E: Exponent>(ideal: &MonomialIdeal<E>) -> Result<Vec<PrimeSupport>> {
    Ok(Decomposition::compute(ideal)?.associated_primes())
}

/// Dense component: exponent per variable, zero where the variable is absent.
type Dense<E> = Vec<E>;

#[derive(Default)]
struct Splitter<E: Exponent> {
    memo: HashMap<Vec<Monomial<E>>, Arc<Vec<Dense<E>>>>,
}

impl<E: Exponent> Splitter<E> {
    /// `gens` must be minimized and generate a proper ideal.
    fn decompose(&mut self, gens: Vec<Monomial<E>>) -> Arc<Vec<Dense<E>>> {
        if let Some(hit) = self.memo.get(&gens) {
            return hit.clone();
        }
        let result = match gens.iter().position(|g| !g.is_pure_power()) {
            None => {
                let mut dense = vec![E::zero(); gens[0].nvars()];
                for g in &gens {
                    let v = g.support()[0];
                    dense[v] = g.exponent(v);
                }
                Arc::new(vec![dense])
            }
            Some(pos) => {
                let u = &gens[pos];
                let var = u.support()[0];
                let power = Monomial::var_power(u.nvars(), var, u.exponent(var)).expect("in range");
                let cofactor = u.clone().with_exponent(var, E::zero());
                let rest = || gens.iter().enumerate().filter(|(i, _)| *i != pos).map(|(_, g)| g.clone());
                let left = minimize(rest().chain(std::iter::once(power)).collect());
                let right = minimize(rest().chain(std::iter::once(cofactor)).collect());
                let mut all: Vec<Dense<E>> = self.decompose(left).as_ref().clone();
                all.extend(self.decompose(right).iter().cloned());
                Arc::new(prune(all))
            }
        };
        self.memo.insert(gens, result.clone());
        result
    }
}

/// `a ⊇ b` for dense pure-power ideals.
fn dense_contains<E: Exponent>(a: &[E], b: &[E]) -> bool {
    a.iter().zip(b).all(|(&x, &y)| y.is_zero() || (!x.is_zero() && x <= y))
}

/// Drop duplicates and every component containing another.
fn prune<E: Exponent>(mut comps: Vec<Dense<E>>) -> Vec<Dense<E>> {
    comps.sort();
    comps.dedup();
    let keep: Vec<bool> = (0..comps.len())
        .map(|i| !(0..comps.len()).any(|j| j != i && dense_contains(&comps[i], &comps[j])))
        .collect();
    comps.into_iter().zip(keep).filter(|(_, k)| *k).map(|(c, _)| c).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(
            RingContext::new(n).unwrap(),
            gens.iter().map(|g| Monomial::from_exponents(g.to_vec())),
        )
        .unwrap()
    }

    #[test]
    fn irreducible_input_is_its_own_decomposition() {
        let i = ideal(3, &[&[2, 0, 0], &[0, 0, 1]]);
        let d = Decomposition::compute(&i).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d.components()[0].powers(), &[(0, 2), (2, 1)]);
        let p = d.components()[0].prime();
        assert_eq!(d.components_for(&p).unwrap().len(), 1);
    }

    #[test]
    fn two_by_two() {
        // ⟨x1^2, x1 x2, x2^3⟩ = ⟨x1, x2^3⟩ ∩ ⟨x1^2, x2⟩
        let i = ideal(2, &[&[2, 0], &[1, 1], &[0, 3]]);
        let d = Decomposition::compute(&i).unwrap();
        let shown: Vec<String> = d.components().iter().map(|c| c.to_string()).collect();
        assert_eq!(shown, ["⟨x1^2, x2⟩", "⟨x1, x2^3⟩"]);
        assert_eq!(d.recombine(), i);
        assert!(d.is_irredundant());
    }

    #[test]
    fn rejects_trivial_ideals() {
        let r = RingContext::new(2).unwrap();
        assert_eq!(Decomposition::<u32>::compute(&MonomialIdeal::zero(r.clone())), Err(Error::ZeroIdeal));
        assert_eq!(Decomposition::<u32>::compute(&MonomialIdeal::unit(r)), Err(Error::UnitIdeal));
    }

    #[test]
    fn unassociated_prime_is_an_error() {
        let i = ideal(2, &[&[1, 0]]);
        let d = Decomposition::compute(&i).unwrap();
        let p = PrimeSupport::new(i.ring().clone(), [1]).unwrap();
        assert!(matches!(d.components_for(&p), Err(Error::NotAssociated(_))));
    }

    #[test]
    fn component_validation() {
        let r = RingContext::new(2).unwrap();
        assert!(IrreducibleComponent::<u32>::new(r.clone(), []).is_err());
        assert!(IrreducibleComponent::<u32>::new(r.clone(), [(0, 0)]).is_err());
        assert!(IrreducibleComponent::<u32>::new(r.clone(), [(0, 1), (0, 2)]).is_err());
        assert!(IrreducibleComponent::<u32>::new(r, [(5, 1)]).is_err());
    }

    #[test]
    fn component_containment() {
        let r = RingContext::new(3).unwrap();
        let big = IrreducibleComponent::<u32>::new(r.clone(), [(0, 1), (1, 2)]).unwrap();
        let small = IrreducibleComponent::<u32>::new(r.clone(), [(0, 3), (1, 2), (2, 1)]).unwrap();
        let other = IrreducibleComponent::<u32>::new(r, [(2, 1)]).unwrap();
        assert!(big.contains(&big));
        assert!(!big.contains(&small));
        assert!(!small.contains(&big));
        assert!(!big.contains(&other));
        let mixed = IrreducibleComponent::<u32>::new(big.ring().clone(), [(0, 3), (1, 2)]).unwrap();
        assert!(big.contains(&mixed));
        assert!(big.to_ideal().contains_ideal(&mixed.to_ideal()).unwrap());
    }
}
