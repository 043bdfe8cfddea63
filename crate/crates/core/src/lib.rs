//! Exact commutative-algebra toolkit for hypersurface singularities: Groebner
//! bases, local lengths and multiplicities, matrix factorizations with
//! homotopy certificates, and dimension bounds for singularity categories.

pub mod bounds;
pub mod coeff;
pub mod error;
pub mod groebner;
pub mod mf;
pub mod parse;
pub mod poly;
pub mod ring;

pub use coeff::{Coeff, Field};
pub use error::{BoundsError, ErrorKind, GroebnerError, MfError, ParseError, PolyError, RingError};
pub use groebner::{GroebnerBasis, Ideal, Length, MembershipCertificate, Semantics};
pub use parse::{parse_polynomial, parse_polynomial_list, parse_ring_spec, RingSpec};
pub use poly::{Monomial, MonomialOrder, OrderKind, PolyRing, Polynomial};
