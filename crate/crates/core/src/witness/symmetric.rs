use std::sync::Arc;

use crate::decomposition::IrreducibleComponent;
use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::prime::PrimeSupport;
use crate::ring::RingContext;

use super::verify_witness;

/// The ideal generated by `x_{i_1}^{a_1} ... x_{i_k}^{a_k}` over all
/// injective choices of `i_1, ..., i_k`, for fixed `a_1 <= ... <= a_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricPatternIdeal<E: Exponent = u32> {
    ring: Arc<RingContext>,
    exps: Vec<E>,
    /// 1-based positions `k_1 = 1 < k_2 < ... < k_r` where a new value starts.
    breaks: Vec<usize>,
}

impl<E: Exponent> SymmetricPatternIdeal<E> {
    /// The exponent multiset may be given in any order; it is stored sorted.
    pub fn new(ring: Arc<RingContext>, exps: impl IntoIterator<Item = E>) -> Result<Self> {
        let mut exps: Vec<E> = exps.into_iter().collect();
        if exps.is_empty() {
            return Err(Error::InvalidArgument("pattern needs at least one exponent".into()));
        }
        if exps.len() > ring.n() {
            return Err(Error::InvalidArgument(format!(
                "pattern length k = {} exceeds n = {}",
                exps.len(),
                ring.n()
            )));
        }
        if exps.iter().any(|e| e.is_zero()) {
            return Err(Error::InvalidArgument("pattern exponents must be positive".into()));
        }
        exps.sort();
        let breaks = (0..exps.len())
            .filter(|&i| i == 0 || exps[i] != exps[i - 1])
            .map(|i| i + 1)
            .collect();
        Ok(Self { ring, exps, breaks })
    }

    pub fn ring(&self) -> &Arc<RingContext> {
        &self.ring
    }

    pub fn k(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[E] {
        &self.exps
    }

    /// The positions `k_j` (1-based), one per distinct exponent value.
    pub fn breaks(&self) -> &[usize] {
        &self.breaks
    }

    /// `a_{k_j}` for the 0-based break index `j`.
    pub fn break_value(&self, j: usize) -> E {
        self.exps[self.breaks[j] - 1]
    }

    /// Size `n - k + k_j` of the associated primes attached to break `j`.
    pub fn prime_size(&self, j: usize) -> usize {
        self.ring.n() - self.k() + self.breaks[j]
    }

    pub fn build(&self) -> MonomialIdeal<E> {
        let n = self.ring.n();
        let mut gens = Vec::new();
        let mut exps = vec![E::zero(); n];
        assign(&self.exps, 0, &mut exps, &mut gens);
        MonomialIdeal::from_parts(self.ring.clone(), gens)
    }

    /// The pure-power ideals `⟨x_S^{a_{k_j}}⟩` over all `j` and all variable
    /// sets `S` of size `n - k + k_j`. Their intersection is the ideal; the
    /// family is not claimed to be irredundant.
    pub fn pattern_components(&self) -> Vec<IrreducibleComponent<E>> {
        let n = self.ring.n();
        let mut out = Vec::new();
        for j in 0..self.breaks.len() {
            let a = self.break_value(j);
            for subset in subsets(n, self.prime_size(j)) {
                out.push(
                    IrreducibleComponent::new(self.ring.clone(), subset.into_iter().map(|v| (v, a)))
                        .expect("valid subset"),
                );
            }
        }
        out
    }

    /// Witness for the prime on `prime_vars` attached to break `j` (0-based).
    ///
    /// Prime variables get exponent `a_{k_j} - 1`; the remaining variables, in
    /// ascending order, get `b_choices[t]`, each of which must be at least
    /// `a_{k_j + t}` (1-based `t`).
    pub fn witness(
        &self,
        j: usize,
        prime_vars: &[usize],
        b_choices: &[E],
    ) -> Result<(PrimeSupport, Monomial<E>)> {
        if j >= self.breaks.len() {
            return Err(Error::InvalidArgument(format!(
                "break index {j} out of range (pattern has {} distinct values)",
                self.breaks.len()
            )));
        }
        let prime = PrimeSupport::new(self.ring.clone(), prime_vars.iter().copied())?;
        let want = self.prime_size(j);
        if prime.k() != want || prime_vars.len() != want {
            return Err(Error::InvalidArgument(format!(
                "prime for break {} needs {want} distinct variables, got {}",
                j,
                prime_vars.len()
            )));
        }
        let k_j = self.breaks[j];
        let tail = &self.exps[k_j..];
        if b_choices.len() != tail.len() {
            return Err(Error::InvalidArgument(format!(
                "expected {} exponents for the remaining variables, got {}",
                tail.len(),
                b_choices.len()
            )));
        }
        if let Some(t) = b_choices.iter().zip(tail).position(|(b, a)| b < a) {
            return Err(Error::InvalidArgument(format!(
                "b_{} = {} is below its floor {}",
                t + 1,
                b_choices[t],
                tail[t]
            )));
        }

        let mut exps = vec![E::zero(); self.ring.n()];
        let base = self.break_value(j) - E::one();
        for &v in prime.vars() {
            exps[v] = base;
        }
        for (var, &b) in prime.complement().into_iter().zip(b_choices) {
            exps[var] = b;
        }
        let v = Monomial::from_exponents(exps);
        if !verify_witness(&self.build(), &prime, &v)? {
            return Err(Error::Inconsistency(format!(
                "pattern witness {} does not give {}",
                self.ring.format_monomial(&v),
                prime
            )));
        }
        Ok((prime, v))
    }
}

fn assign<E: Exponent>(pattern: &[E], pos: usize, exps: &mut Vec<E>, out: &mut Vec<Monomial<E>>) {
    if pos == pattern.len() {
        out.push(Monomial::from_exponents(exps.clone()));
        return;
    }
    for var in 0..exps.len() {
        if exps[var].is_zero() {
            exps[var] = pattern[pos];
            assign(pattern, pos + 1, exps, out);
            exps[var] = E::zero();
        }
    }
}

/// All `size`-subsets of `0..n` in lexicographic order.
fn subsets(n: usize, size: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            if n - v < size - cur.len() {
                break;
            }
            cur.push(v);
            go(v + 1, n, size, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, size, &mut Vec::new(), &mut out);
    out
}
