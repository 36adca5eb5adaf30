//! Computations in quotients `S/a` of polynomial rings over `Q` and `F_p`,
//! localized at the origin: Gröbner bases, colon ideals, lengths, socles,
//! Hilbert–Samuel multiplicities, and drivers that rebuild specific ring
//! families and check numerical claims about them.
//!
//! ```
//! use socle_lab::{invariants, RingPresentation};
//!
//! let r = RingPresentation::parse("F101[x,y] / (x*y)").unwrap();
//! let q = r.parse_ideal("(x + y)").unwrap();
//! assert_eq!(invariants::length(&q).unwrap(), 2);
//! assert_eq!(invariants::multiplicity(&q).unwrap(), 2);
//! ```

pub mod artinian;
pub mod division;
pub mod error;
pub mod families;
pub mod field;
pub mod groebner;
pub mod ideal;
pub mod invariants;
pub mod monomial;
pub mod poly;
pub mod presentation;
pub mod report;
pub mod ring;
pub mod sampling;
pub mod script;
pub mod text;

pub use artinian::ArtinianQuotient;
pub use error::{Error, Result};
pub use field::{Field, Scalar};
pub use groebner::{buchberger, GroebnerBasis};
pub use ideal::{subalgebra_presentation, Ideal};
pub use monomial::{Monomial, MonomialOrder};
pub use poly::{Polynomial, Term};
pub use presentation::RingPresentation;
pub use ring::PolyRing;

/// Version string recorded in reports.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
