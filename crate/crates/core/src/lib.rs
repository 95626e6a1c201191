//! Exact bi-periodic Horadam hybrid numbers.
//!
//! Hybrid numbers `a + bi + cε + dh` (`i² = −1`, `ε² = 0`, `h² = 1`,
//! `ih = −hi = ε + i`) whose components are consecutive terms of the
//! bi-periodic Horadam sequence `w_n = χ(n)w_{n−1} + cw_{n−2}`, evaluated with
//! zero numerical error over rationals and the formal extension `Q(√Δ²)`.
//!
//! The algebra is generic over the scalar: [`Field`] covers every
//! `num_traits::Num` type (`BigRational`, `f64`, ...), [`QuadExt`] adjoins a
//! formal square root, and [`Hybrid`] runs over either. The identity checks in
//! [`identities`] are exact and work over [`Rational`].
//!
//! ```
//! use hybrid_horadam::{family_lookup, rational::int, HybridSeq};
//!
//! let fib = HybridSeq::new(family_lookup("fibonacci", &[]).unwrap());
//! assert_eq!(fib.term(2).to_string(), "1 + 2 i + 3 ε + 5 h");
//! assert_eq!(fib.character(0), int(-5));
//! ```

pub mod error;
pub mod families;
pub mod grid;
pub mod hybrid;
pub mod hybrid_seq;
pub mod identities;
pub mod quad;
pub mod rational;
pub mod repr;
pub mod scalar;
pub mod seq;
pub mod sweep;

pub use error::{ArithError, IdentityError, ParamError};
pub use families::{family_lookup, Family, FAMILIES};
pub use hybrid::Hybrid;
pub use hybrid_seq::{root_hybrids, HybridSeq, RootHybrid};
pub use quad::QuadExt;
pub use rational::Rational;
pub use scalar::{Field, Scalar};
pub use seq::{parity, u_v_relation_check, Recurrence, SeqKind, SeqParams, Sequence};

/// `p + q·√Δ` over exact rationals.
pub type Quad = QuadExt<Rational>;
/// Hybrid number with rational components.
pub type HybridRat = Hybrid<Rational>;
/// Hybrid number with components in `Q(√Δ)`.
pub type HybridQuad = Hybrid<Quad>;
/// Hybrid number with `f64` components; inexact.
pub type HybridF64 = Hybrid<f64>;
/// Exact sequence parameters.
pub type Params = SeqParams<Rational>;
