//! Clutters, their edge ideals, and witness bases built from stable sets.
//!
//! Vertex `t_i` of a clutter is identified with variable `i` of its ring, so
//! a vertex set and a monomial prime are two views of the same subset.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::prime::PrimeSupport;
use crate::ring::{ensure_same_ring, RingContext};
use crate::witness::verify_witness;

/// Largest vertex count enumerated by default.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 16;

const HARD_ENUMERATION_LIMIT: usize = 63;

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(BTreeSet<usize>);

impl VertexSet {
    pub fn new(vertices: impl IntoIterator<Item = usize>) -> Self {
        Self(vertices.into_iter().collect())
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.is_subset(&other.0)
    }

    fn from_mask(mask: u64) -> Self {
        Self((0..64).filter(|v| mask >> v & 1 == 1).collect())
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Self::new(iter)
    }
}

/// A family of vertex sets, none contained in another.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Clutter {
    ring: Arc<RingContext>,
    edges: Vec<VertexSet>,
    limit: usize,
}

impl Clutter {
    /// Vertices are the variables of `ring`; identical edges are merged.
    pub fn new<I, S>(ring: Arc<RingContext>, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: IntoIterator<Item = usize>,
    {
        let mut list: Vec<VertexSet> = Vec::new();
        for edge in edges {
            let edge = VertexSet::new(edge);
            if edge.is_empty() {
                return Err(Error::InvalidClutter("empty edge".into()));
            }
            for v in edge.vertices() {
                ring.check_var(v)?;
            }
            list.push(edge);
        }
        list.sort();
        list.dedup();
        for (i, a) in list.iter().enumerate() {
            for (j, b) in list.iter().enumerate() {
                if i != j && a.is_subset(b) {
                    return Err(Error::InvalidClutter(format!(
                        "edge {{{}}} is contained in edge {{{}}}",
                        names(&ring, a),
                        names(&ring, b)
                    )));
                }
            }
        }
        Ok(Self { ring, edges: list, limit: DEFAULT_ENUMERATION_LIMIT })
    }

    /// Changes the vertex limit for the enumerating operations (at most 63).
    pub fn with_enumeration_limit(mut self, limit: usize) -> Self {
        self.limit = limit.min(HARD_ENUMERATION_LIMIT);
        self
    }

    pub fn ring(&self) -> &Arc<RingContext> {
        &self.ring
    }

    pub fn vertex_count(&self) -> usize {
        self.ring.n()
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    /// `I(C) = ⟨t_e : e ∈ E(C)⟩`.
    pub fn edge_ideal<E: Exponent>(&self) -> MonomialIdeal<E> {
        let n = self.ring.n();
        let gens = self
            .edges
            .iter()
            .map(|e| Monomial::squarefree(n, e.vertices()).expect("vertices checked"));
        MonomialIdeal::new(self.ring.clone(), gens).expect("same ring")
    }

    fn check_vertices(&self, set: &VertexSet) -> Result<()> {
        set.vertices().try_for_each(|v| self.ring.check_var(v))
    }

    /// `A` contains no edge.
    pub fn is_stable(&self, set: &VertexSet) -> Result<bool> {
        self.check_vertices(set)?;
        Ok(!self.edges.iter().any(|e| e.is_subset(set)))
    }

    /// `N_C(A)`: vertices `t` such that `{t} ∪ A` contains an edge.
    pub fn neighbor_set(&self, set: &VertexSet) -> Result<VertexSet> {
        self.check_vertices(set)?;
        Ok((0..self.vertex_count())
            .filter(|&t| {
                self.edges
                    .iter()
                    .any(|e| e.vertices().all(|v| v == t || set.contains(v)))
            })
            .collect())
    }

    pub fn is_vertex_cover(&self, set: &VertexSet) -> bool {
        self.edges.iter().all(|e| e.vertices().any(|v| set.contains(v)))
    }

    /// Meets every edge and no proper subset does.
    pub fn is_minimal_vertex_cover(&self, set: &VertexSet) -> bool {
        if set.vertices().any(|v| v >= self.vertex_count()) || !self.is_vertex_cover(set) {
            return false;
        }
        // covering is monotone, so dropping single vertices is enough
        set.vertices()
            .all(|drop| !self.is_vertex_cover(&set.vertices().filter(|&v| v != drop).collect()))
    }

    fn check_limit(&self) -> Result<()> {
        if self.vertex_count() > self.limit {
            Err(Error::EnumerationLimit { vertices: self.vertex_count(), limit: self.limit })
        } else {
            Ok(())
        }
    }

    fn edge_masks(&self) -> Vec<u64> {
        self.edges
            .iter()
            .map(|e| e.vertices().fold(0u64, |m, v| m | 1 << v))
            .collect()
    }

    fn subsets_where(&self, keep: impl Fn(u64, &[u64]) -> bool) -> Result<Vec<VertexSet>> {
        self.check_limit()?;
        let masks = self.edge_masks();
        let full = 1u64 << self.vertex_count();
        Ok((0..full).filter(|&s| keep(s, &masks)).map(VertexSet::from_mask).collect())
    }

    /// All minimal vertex covers, ordered by their vertex bitmask.
    pub fn minimal_vertex_covers(&self) -> Result<Vec<VertexSet>> {
        let n = self.vertex_count();
        self.subsets_where(|s, masks| {
            let covers = |s: u64| masks.iter().all(|&e| e & s != 0);
            covers(s) && (0..n).filter(|v| s >> v & 1 == 1).all(|v| !covers(s & !(1 << v)))
        })
    }

    /// `F_C`: the maximal stable sets.
    pub fn maximal_stable_sets(&self) -> Result<Vec<VertexSet>> {
        let n = self.vertex_count();
        self.subsets_where(|s, masks| {
            let stable = |s: u64| masks.iter().all(|&e| e & s != e);
            stable(s) && (0..n).filter(|v| s >> v & 1 == 0).all(|v| !stable(s | 1 << v))
        })
    }

    /// `A_C`: stable sets whose neighbor set is a minimal vertex cover.
    ///
    /// A stable set whose neighbor set covers every edge already has a
    /// minimal cover as neighbor set, so only the covering test is run.
    pub fn good_stable_sets(&self) -> Result<Vec<VertexSet>> {
        let n = self.vertex_count();
        self.subsets_where(|s, masks| {
            if !masks.iter().all(|&e| e & s != e) {
                return false;
            }
            let neighbors = (0..n)
                .filter(|&t| masks.iter().any(|&e| e & !(s | 1 << t) == 0))
                .fold(0u64, |m, t| m | 1 << t);
            masks.iter().all(|&e| e & neighbors != 0)
        })
    }

    /// `t_A` for `A = V(C) \ P`, checked to satisfy `P = (I(C) : t_A)`.
    pub fn witness_base<E: Exponent>(&self, prime: &PrimeSupport) -> Result<Monomial<E>> {
        ensure_same_ring(&self.ring, prime.ring())?;
        let cover = VertexSet::new(prime.vars().iter().copied());
        if !self.is_minimal_vertex_cover(&cover) {
            return Err(Error::NotAssociated(prime.to_string()));
        }
        let stable = VertexSet::new(prime.complement());
        let maximal = self.is_stable(&stable)?
            && (0..self.vertex_count())
                .filter(|v| !stable.contains(*v))
                .all(|v| !self.is_stable(&stable.vertices().chain([v]).collect()).unwrap_or(true));
        if !maximal || self.neighbor_set(&stable)? != cover {
            return Err(Error::Inconsistency(format!(
                "complement of {prime} is not a maximal stable set with neighbor set {prime}"
            )));
        }
        let t_a = Monomial::squarefree(self.vertex_count(), stable.vertices())?;
        if !verify_witness(&self.edge_ideal(), prime, &t_a)? {
            return Err(Error::Inconsistency(format!(
                "t_A = {} is not a witness for {prime}",
                self.ring.format_monomial(&t_a)
            )));
        }
        Ok(t_a)
    }
}

fn names(ring: &RingContext, set: &VertexSet) -> String {
    set.vertices().map(|v| ring.name(v)).collect::<Vec<_>>().join(",")
}
