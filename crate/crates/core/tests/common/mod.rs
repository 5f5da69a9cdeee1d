//! Shared fixtures and brute-force oracles for the integration tests.
//!
//! Everything here is definitional: membership by scanning generators,
//! colon and intersection by enumerating an exponent box. None of it calls
//! the library's colon, intersection or decomposition routines.

#![allow(dead_code)]

use std::sync::Arc;

use monideal::{Monomial, MonomialIdeal, RingContext};
use rand::Rng;

pub fn mono(exps: &[u32]) -> Monomial {
    Monomial::from_exponents(exps.to_vec())
}

pub fn ideal(ring: &Arc<RingContext>, gens: &[&[u32]]) -> MonomialIdeal {
    MonomialIdeal::new(ring.clone(), gens.iter().map(|g| mono(g))).unwrap()
}

/// Sparse monomial from `(1-based variable, exponent)` pairs.
pub fn sparse(n: usize, factors: &[(usize, u32)]) -> Monomial {
    let mut e = vec![0; n];
    for &(v, p) in factors {
        e[v - 1] += p;
    }
    Monomial::from_exponents(e)
}

/// ⟨x1^4, x2^7, x3^5, x1^3x4^2, x2^4x4^2, x3x4^2, x4^5, x4^2x8^2, x1x8^8⟩ in 8 variables.
pub fn session_ideal() -> MonomialIdeal {
    let ring = RingContext::new(8).unwrap();
    let gens = [
        sparse(8, &[(1, 4)]),
        sparse(8, &[(2, 7)]),
        sparse(8, &[(3, 5)]),
        sparse(8, &[(1, 3), (4, 2)]),
        sparse(8, &[(2, 4), (4, 2)]),
        sparse(8, &[(3, 1), (4, 2)]),
        sparse(8, &[(4, 5)]),
        sparse(8, &[(4, 2), (8, 2)]),
        sparse(8, &[(1, 1), (8, 8)]),
    ];
    MonomialIdeal::new(ring, gens).unwrap()
}

/// ⟨x1x3^5, x2^4x5^3, x2^4x4^4, x1^5x4^2, x1x6^8⟩ in 6 variables.
pub fn uniqueness_example_ideal() -> MonomialIdeal {
    let ring = RingContext::new(6).unwrap();
    let gens = [
        sparse(6, &[(1, 1), (3, 5)]),
        sparse(6, &[(2, 4), (5, 3)]),
        sparse(6, &[(2, 4), (4, 4)]),
        sparse(6, &[(1, 5), (4, 2)]),
        sparse(6, &[(1, 1), (6, 8)]),
    ];
    MonomialIdeal::new(ring, gens).unwrap()
}

/// Raw generator list (possibly redundant) with `1..=max_gens` nonconstant
/// monomials in `n` variables, exponents at most `max_exp`.
pub fn random_generators<R: Rng>(rng: &mut R, n: usize, max_exp: u32, max_gens: usize) -> Vec<Monomial> {
    let count = rng.gen_range(1..=max_gens);
    (0..count)
        .map(|_| loop {
            let e: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=max_exp)).collect();
            if e.iter().any(|&x| x > 0) {
                break Monomial::from_exponents(e);
            }
        })
        .collect()
}

/// Random proper nonzero ideal with `1..=max_n` variables.
pub fn random_ideal<R: Rng>(rng: &mut R, max_n: usize, max_exp: u32, max_gens: usize) -> MonomialIdeal {
    let n = rng.gen_range(1..=max_n);
    let ring = RingContext::new(n).unwrap();
    MonomialIdeal::new(ring, random_generators(rng, n, max_exp, max_gens)).unwrap()
}

/// Every exponent vector with entry `i` in `0..=bound[i]`.
pub fn exponent_box(bound: &[u32]) -> Vec<Monomial> {
    let mut out = vec![Vec::new()];
    for &b in bound {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<u32>| {
                (0..=b).map(move |e| {
                    let mut p = prefix.clone();
                    p.push(e);
                    p
                })
            })
            .collect();
    }
    out.into_iter().map(Monomial::from_exponents).collect()
}

/// Box reaching one past the largest generator exponent in every variable.
pub fn box_bound(ideals: &[&MonomialIdeal]) -> Vec<u32> {
    let n = ideals[0].ring().n();
    (0..n)
        .map(|v| {
            ideals
                .iter()
                .flat_map(|i| i.generators().iter().map(move |g| g.exponents()[v]))
                .max()
                .unwrap_or(0)
                + 1
        })
        .collect()
}

fn le(a: &Monomial, b: &Monomial) -> bool {
    a.exponents().iter().zip(b.exponents()).all(|(x, y)| x <= y)
}

/// `m ∈ I` by definition: some listed generator divides `m`.
pub fn oracle_member(gens: &[Monomial], m: &Monomial) -> bool {
    gens.iter().any(|g| le(g, m))
}

pub fn oracle_product(a: &Monomial, b: &Monomial) -> Monomial {
    Monomial::from_exponents(a.exponents().iter().zip(b.exponents()).map(|(x, y)| x + y).collect())
}

/// Generators minimal under divisibility, by the O(m²) pairwise filter.
pub fn oracle_minimal(gens: &[Monomial]) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        let strictly_divided = gens.iter().any(|h| h != g && le(h, g));
        let earlier_copy = gens[..i].contains(g);
        if !strictly_divided && !earlier_copy {
            out.push(g.clone());
        }
    }
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// `(I : v)` equals the ideal `candidate`, decided on every monomial of the box.
/// Because a monomial ideal is determined by its members up to one past its
/// generator exponents, agreement on that box is equality.
pub fn oracle_colon_equals(gens: &[Monomial], v: &Monomial, candidate: &MonomialIdeal) -> bool {
    let probe_bound: Vec<u32> = (0..v.nvars())
        .map(|i| {
            gens.iter()
                .chain(candidate.generators())
                .map(|g| g.exponents()[i])
                .max()
                .unwrap_or(0)
                + 1
        })
        .collect();
    exponent_box(&probe_bound)
        .iter()
        .all(|m| oracle_member(gens, &oracle_product(m, v)) == oracle_member(candidate.generators(), m))
}

/// All monomials `v` in the box with `(I : v) = P`, by brute force.
pub fn oracle_witnesses(ideal: &MonomialIdeal, prime: &MonomialIdeal, bound: &[u32]) -> Vec<Monomial> {
    exponent_box(bound)
        .into_iter()
        .filter(|v| oracle_colon_equals(ideal.generators(), v, prime))
        .collect()
}
