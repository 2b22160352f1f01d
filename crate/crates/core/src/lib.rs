//! symsurf: exact-arithmetic obstructions to representing second homology
//! classes of closed symplectic 4-manifolds by embedded, possibly
//! disconnected, symplectic surfaces.
//!
//! The engine works entirely with the intersection lattice (the model is
//! H2 modulo torsion), the canonical class, the spin flag, and optionally
//! the symplectic class. For a class B = d*A it computes the invariants of
//! the d-fold cyclic cover branched along a surface in B, certifies the
//! cover minimal and non-ruled when possible, and concludes an obstruction
//! whenever the cover's canonical square would be forced negative. All
//! arithmetic is exact: checked 64/128-bit integers, arbitrary-precision
//! rationals for signatures and symplectic coordinates, no floats.
//!
//! ```
//! use symsurf::{obstruction, Manifold4, VerdictStatus};
//!
//! // Twice the exceptional class of a blown-up K3 is never represented by
//! // an embedded symplectic surface.
//! let m = Manifold4::k3().blow_up();
//! let b = m.exceptional_class().scaled(2).unwrap();
//! let check = obstruction::check_class(&m, &b).unwrap();
//! assert!(check.is_obstructed());
//! assert_eq!(check.verdicts[0].status, VerdictStatus::Obstructed);
//! assert_eq!(check.verdicts[0].k_base_sq, -4);
//! ```

pub mod cover;
pub mod error;
pub mod lattice;
pub mod manifold;
pub mod obstruction;
pub mod rational;

pub use cover::{
    CertificateKind, CoverInvariants, DivisibilityFacts, MinimalityCertificate, SpinFurutaFacts,
    SpinReason, SpinStatus,
};
pub use error::{Error, Result};
pub use lattice::{HClass, Lattice, Sign, Signature};
pub use manifold::Manifold4;
pub use obstruction::{
    ClassCheck, ObstructionVerdict, ReasonCode, SWReport, SearchHit, VerdictStatus,
};
