//! Invariants of the d-fold cyclic cover branched along a surface in class
//! d*A, and the certificates that force the cover to be minimal and not
//! ruled.
//!
//! The cover's lattice is never materialized: its canonical class is pulled
//! back from the base, so every invariant used downstream is a base-level
//! integer or class. For a degree-d cyclic branched cover:
//!
//! ```text
//! K_bar     = pullback of K + (d-1)A
//! K_bar^2   = d * (K + (d-1)A)^2
//! w2_bar    = pullback of (K + (d-1)A) mod 2
//! sigma_bar = d * (sigma - (d^2-1)/3 * A^2)
//! ```

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::HClass;
use crate::manifold::Manifold4;

/// Spin status of the branched cover.
///
/// Only the sufficient direction is ever claimed: the pullback on mod-2
/// cohomology is not injective in general, so a nonvanishing base-level
/// class does not certify that the cover is non-spin. There is no `NotSpin`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SpinStatus {
    Spin,
    Unknown,
}

/// Which sufficient condition certified the cover spin.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SpinReason {
    /// d odd and the base is spin.
    OddDegreeSpinBase,
    /// d even and A is characteristic.
    EvenDegreeCharacteristicClass,
    /// K + (d-1)A pairs evenly with every class.
    EvenPairings,
}

/// How minimality (and exclusion of ruled surfaces) was certified.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CertificateKind {
    /// Cover is spin with nonzero signature: minimal, and b2+ >= 3 by the
    /// 10/8-type bound.
    ViaSpinFuruta,
    /// Canonical class of the cover divisible by k >= 2 on a base with
    /// b2+ >= 2: minimal (a non-minimal symplectic 4-manifold contains a
    /// symplectic sphere S with K.S = -1), and b2+ of the cover >= 2.
    ViaDivisibility,
    None,
}

/// Facts recorded when the spin route holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpinFurutaFacts {
    pub spin_reason: SpinReason,
    /// 3 * sigma of the base.
    pub three_sigma: i64,
    /// (d^2 - 1) * A^2; the route needs three_sigma != a_sq_term.
    pub a_sq_term: i64,
    /// Signature of the cover; nonzero by the inequality above.
    pub sigma_bar: i64,
    /// >= 3 via the spin bound.
    pub b2_plus_lower_bound: u32,
}

/// Facts recorded when the divisibility route holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisibilityFacts {
    /// Divisibility of K + (d-1)A; 0 means the zero class, divisible by
    /// every k >= 2.
    pub k: u64,
    /// b2+ of the base; >= 2, inherited by the cover.
    pub b2_plus: u32,
}

/// Certificate that the branched cover is minimal and not a ruled surface
/// over a curve of genus > 1. Both routes are recorded whenever they hold;
/// `kind` is the headline route.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalityCertificate {
    pub kind: CertificateKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spin_furuta: Option<SpinFurutaFacts>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub divisibility: Option<DivisibilityFacts>,
}

impl MinimalityCertificate {
    pub fn none() -> Self {
        MinimalityCertificate {
            kind: CertificateKind::None,
            spin_furuta: None,
            divisibility: None,
        }
    }

    pub fn holds(&self) -> bool {
        self.kind != CertificateKind::None
    }
}

/// Invariants of the d-fold cyclic branched cover along a surface in d*A,
/// reported at base level.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverInvariants {
    pub d: i64,
    /// The branch class A.
    pub base_class: HClass,
    /// Base-level representative K + (d-1)A of the cover's canonical class.
    pub k_base: HClass,
    /// Square of the cover's canonical class: d * k_base^2.
    pub k_sq: i64,
    /// Signature of the cover.
    pub sigma_bar: i64,
    pub spin_bar: SpinStatus,
    /// Lower bound for b2+ of the cover.
    pub b2plus_lb: u32,
}

fn require_degree(d: i64, min: i64) -> Result<()> {
    if d < min {
        return Err(Error::InvalidDegree { d, min });
    }
    Ok(())
}

/// Base-level representative `K + (d-1)A` of the cover's canonical class.
pub fn k_base(m: &Manifold4, a: &HClass, d: i64) -> Result<HClass> {
    require_degree(d, 1)?;
    HClass::combine(1, m.canonical_class(), d - 1, a)
}

/// Square of the cover's canonical class, `d * (K + (d-1)A)^2`.
pub fn k_sq(m: &Manifold4, a: &HClass, d: i64) -> Result<i64> {
    let kb = k_base(m, a, d)?;
    let sq = m.lattice().square(&kb)?;
    d.checked_mul(sq).ok_or(Error::Overflow {
        context: "cover canonical square",
    })
}

/// Signature of the cover, the exact integer `d*(3*sigma - (d^2-1)*A^2)/3`.
///
/// A non-integer value would mean no such cover exists; that is reported as
/// [`Error::NonIntegralSignature`], never rounded.
pub fn sigma_bar(m: &Manifold4, a: &HClass, d: i64) -> Result<i64> {
    require_degree(d, 1)?;
    let a_sq = m.lattice().square(a)? as i128;
    let three_sigma = 3 * m.sigma() as i128;
    let d = d as i128;
    let overflow = Error::Overflow {
        context: "cover signature",
    };
    let term = (d * d - 1).checked_mul(a_sq).ok_or(overflow.clone())?;
    let numerator = three_sigma
        .checked_sub(term)
        .and_then(|v| d.checked_mul(v))
        .ok_or(overflow)?;
    if numerator % 3 != 0 {
        return Err(Error::NonIntegralSignature {
            d: d as i64,
            numerator: i64::try_from(numerator).unwrap_or(i64::MAX),
        });
    }
    i64::try_from(numerator / 3).map_err(|_| Error::Overflow {
        context: "cover signature",
    })
}

/// Sufficient spin test for the cover, with the reason that fired.
///
/// The cover is spin when the base-level class K + (d-1)A vanishes mod 2 in
/// the pairing sense. Three sufficient readings, checked in order: d odd on
/// a spin base, d even with A characteristic, or all pairings of K + (d-1)A
/// even.
pub fn spin_status_reason(m: &Manifold4, a: &HClass, d: i64) -> Result<Option<SpinReason>> {
    require_degree(d, 1)?;
    if a.len() != m.rank() {
        return Err(Error::DimensionMismatch {
            what: "class",
            expected: m.rank(),
            found: a.len(),
        });
    }
    if d % 2 == 1 && m.spin() {
        return Ok(Some(SpinReason::OddDegreeSpinBase));
    }
    if d % 2 == 0 && m.lattice().is_characteristic(a)? {
        return Ok(Some(SpinReason::EvenDegreeCharacteristicClass));
    }
    let w = k_base(m, a, d)?;
    let all_even = (0..m.rank()).try_fold(true, |acc, i| -> Result<bool> {
        let p = m.lattice().pair(&w, &HClass::basis(m.rank(), i))?;
        Ok(acc && p % 2 == 0)
    })?;
    if all_even {
        return Ok(Some(SpinReason::EvenPairings));
    }
    Ok(None)
}

/// Tri-state spin status of the cover (`Spin` or `Unknown`, never `NotSpin`).
pub fn spin_status(m: &Manifold4, a: &HClass, d: i64) -> Result<SpinStatus> {
    Ok(match spin_status_reason(m, a, d)? {
        Some(_) => SpinStatus::Spin,
        None => SpinStatus::Unknown,
    })
}

/// Lower bound for b2+ of the cover: the base's b2+ always transfers
/// (the covering map has positive degree, so pullback is injective on
/// cohomology and preserves positive squares); a spin cover with nonzero
/// signature has b2+ >= 3.
pub fn b2_plus_lower_bound(m: &Manifold4, spin: SpinStatus, sigma_bar: i64) -> u32 {
    let furuta = if spin == SpinStatus::Spin && sigma_bar != 0 {
        3
    } else {
        0
    };
    m.b2_plus().max(furuta)
}

/// Assembles all cover invariants for `(M, A, d)`.
pub fn invariants(m: &Manifold4, a: &HClass, d: i64) -> Result<CoverInvariants> {
    require_degree(d, 1)?;
    let kb = k_base(m, a, d)?;
    let k_sq = k_sq(m, a, d)?;
    let sigma_bar = sigma_bar(m, a, d)?;
    let spin_bar = spin_status(m, a, d)?;
    let b2plus_lb = b2_plus_lower_bound(m, spin_bar, sigma_bar);
    Ok(CoverInvariants {
        d,
        base_class: a.clone(),
        k_base: kb,
        k_sq,
        sigma_bar,
        spin_bar,
        b2plus_lb,
    })
}

/// Certifies that the d-fold cover branched along d*A is minimal and not a
/// ruled surface over a curve of genus > 1, if either sufficient condition
/// applies:
///
/// (a) the cover is spin (see [`spin_status`]) and `3*sigma != (d^2-1)*A^2`
///     (equivalently `sigma_bar != 0`), or
/// (b) `b2+ >= 2` and `K + (d-1)A` is divisible by some `k >= 2`.
///
/// Both routes are recorded when they hold. The headline `kind` follows the
/// parity of d when both apply: even d headlines the spin route (it carries
/// the per-class characteristic fact), odd d headlines the divisibility
/// route (the spin hypothesis is inherited from the base wholesale).
pub fn minimality_certificate(m: &Manifold4, a: &HClass, d: i64) -> Result<MinimalityCertificate> {
    require_degree(d, 2)?;

    let spin_reason = spin_status_reason(m, a, d)?;
    let a_sq = m.lattice().square(a)?;
    let three_sigma = 3 * m.sigma();
    let a_sq_term = d
        .checked_mul(d)
        .and_then(|dd| dd.checked_sub(1))
        .and_then(|t| t.checked_mul(a_sq))
        .ok_or(Error::Overflow {
            context: "minimality certificate",
        })?;
    let spin_furuta = match spin_reason {
        Some(reason) if three_sigma != a_sq_term => {
            let sb = sigma_bar(m, a, d)?;
            Some(SpinFurutaFacts {
                spin_reason: reason,
                three_sigma,
                a_sq_term,
                sigma_bar: sb,
                b2_plus_lower_bound: b2_plus_lower_bound(m, SpinStatus::Spin, sb),
            })
        }
        _ => None,
    };

    let k = k_base(m, a, d)?.divisibility();
    let divisibility = if m.b2_plus() >= 2 && k != 1 {
        Some(DivisibilityFacts {
            k,
            b2_plus: m.b2_plus(),
        })
    } else {
        None
    };

    let kind = match (&spin_furuta, &divisibility) {
        (Some(_), Some(_)) => {
            if d % 2 == 0 {
                CertificateKind::ViaSpinFuruta
            } else {
                CertificateKind::ViaDivisibility
            }
        }
        (Some(_), None) => CertificateKind::ViaSpinFuruta,
        (None, Some(_)) => CertificateKind::ViaDivisibility,
        (None, None) => CertificateKind::None,
    };

    Ok(MinimalityCertificate {
        kind,
        spin_furuta,
        divisibility,
    })
}
