//! Exact arithmetic on monomial ideals.
//!
//! The crate computes irredundant irreducible decompositions and associated
//! primes of monomial ideals, and constructs explicit monomials `v` with
//! `P = (I : v)` for each associated prime `P`: the general construction from
//! a `P`-primary irreducible component, the squarefree and clutter cases,
//! ideals of Borel type, and the classification of when `v` is unique.
//!
//! All types are generic over the exponent scalar ([`Exponent`]); the
//! aliases below fix it to `u32` (and `u64` for large exponents).
//!
//! ```
//! use monideal::{Decomposition, Monomial, MonomialIdeal, RingContext};
//!
//! let ring = RingContext::new(2).unwrap();
//! let ideal = MonomialIdeal::new(ring, [
//!     Monomial::from_exponents(vec![2u32, 0]),
//!     Monomial::from_exponents(vec![1, 1]),
//!     Monomial::from_exponents(vec![0, 3]),
//! ]).unwrap();
//! let d = Decomposition::compute(&ideal).unwrap();
//! assert_eq!(d.len(), 2);
//! assert_eq!(d.recombine(), ideal);
//! ```

pub mod borel;
pub mod clutter;
pub mod decomposition;
mod error;
mod exponent;
pub mod ideal;
pub mod monomial;
pub mod prime;
pub mod ring;
pub mod witness;

pub use borel::{BorelReport, BorelViolation};
pub use clutter::{Clutter, VertexSet};
pub use decomposition::{associated_primes, irreducible_decomposition, Decomposition, IrreducibleComponent};
pub use error::{Error, Result};
pub use exponent::Exponent;
pub use ideal::MonomialIdeal;
pub use monomial::Monomial;
pub use prime::PrimeSupport;
pub use ring::RingContext;
pub use witness::{SymmetricPatternIdeal, Uniqueness, WitnessSpec};

pub type Monomial32 = Monomial<u32>;
pub type Monomial64 = Monomial<u64>;
pub type Ideal32 = MonomialIdeal<u32>;
pub type Ideal64 = MonomialIdeal<u64>;
pub type Component32 = IrreducibleComponent<u32>;
pub type Component64 = IrreducibleComponent<u64>;
pub type Decomposition32 = Decomposition<u32>;
pub type Decomposition64 = Decomposition<u64>;
