//! The decision engine: combines minimality certificates with the
//! nonnegativity constraint on the cover's canonical square to produce
//! auditable verdicts, plus the Seiberg-Witten vanishing corollary and a
//! bounded box search.
//!
//! A verdict never claims representability. `Obstructed` means "d*A is not
//! represented by any embedded, possibly disconnected, closed symplectic
//! surface"; everything else is `Inconclusive` with machine-diffable reason
//! codes.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cover::{minimality_certificate, MinimalityCertificate};
use crate::error::{Error, Result};
use crate::lattice::HClass;
use crate::manifold::Manifold4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum VerdictStatus {
    Obstructed,
    Inconclusive,
}

/// Closed vocabulary for inconclusive verdicts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ReasonCode {
    /// Neither minimality condition certified the cover.
    NoCertificate,
    /// (K + (d-1)A)^2 >= 0: the canonical-square constraint is not violated.
    SquareNonnegative,
    /// No divisor k >= 2 is available (for B at class level, or for
    /// K + (d-1)A inside the divisibility condition).
    NoDivisor,
    /// The spin condition failed only by 3*sigma == (d^2-1)*A^2.
    SigmaEquality,
    /// The cover could not be certified spin.
    NotSpinCase,
    /// b2+ < 2, so the divisibility condition cannot apply.
    #[serde(rename = "B2PLUS_TOO_SMALL")]
    B2PlusTooSmall,
}

/// Outcome of testing one factorization B = d*A.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionVerdict {
    pub status: VerdictStatus,
    pub d: i64,
    pub a: HClass,
    /// B = d*A, stored for audit.
    pub b: HClass,
    pub certificate: MinimalityCertificate,
    /// (K + (d-1)A)^2; obstruction requires this to be negative.
    pub k_base_sq: i64,
    /// Empty exactly when the status is `Obstructed`.
    pub reasons: Vec<ReasonCode>,
}

/// Class-level analysis of B: every admissible factorization B = d*A, plus
/// the connected-surface adjunction note.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassCheck {
    pub b: HClass,
    pub divisibility: u64,
    pub adjunction_integer: i64,
    /// False means B is not even representable by a connected embedded
    /// symplectic surface (adjunction integer < -2).
    pub adjunction_connected_ok: bool,
    pub verdicts: Vec<ObstructionVerdict>,
}

impl ClassCheck {
    /// A single obstructed factorization suffices: B is not representable.
    pub fn is_obstructed(&self) -> bool {
        self.verdicts
            .iter()
            .any(|v| v.status == VerdictStatus::Obstructed)
    }

    /// Class-level reason codes: the union over factorizations, or
    /// `NO_DIVISOR` when no factorization exists at all.
    pub fn reasons(&self) -> Vec<ReasonCode> {
        if self.is_obstructed() {
            return Vec::new();
        }
        if self.verdicts.is_empty() {
            return vec![ReasonCode::NoDivisor];
        }
        let mut all: Vec<ReasonCode> = self
            .verdicts
            .iter()
            .flat_map(|v| v.reasons.iter().copied())
            .collect();
        all.sort();
        all.dedup();
        all
    }
}

/// Seiberg-Witten consequence of an obstructed class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SWReport {
    /// First Chern class -K + 2B of the canonical Spin^c structure twisted
    /// by B.
    pub c1: HClass,
    pub applicable: bool,
    pub statement: String,
}

/// Tests the fixed factorization B = d*A.
///
/// Obstructed iff some minimality certificate holds and
/// `(K + (d-1)A)^2 < 0`: a minimal, non-ruled cover would need a
/// nonnegative canonical square, so no branched cover - hence no embedded
/// symplectic surface in class d*A - can exist.
pub fn check_fixed_divisor(m: &Manifold4, a: &HClass, d: i64) -> Result<ObstructionVerdict> {
    if d < 2 {
        return Err(Error::InvalidDegree { d, min: 2 });
    }
    let certificate = minimality_certificate(m, a, d)?;
    let k_base = crate::cover::k_base(m, a, d)?;
    let k_base_sq = m.lattice().square(&k_base)?;
    let b = a.scaled(d)?;

    let mut reasons = Vec::new();
    if !certificate.holds() {
        reasons.push(ReasonCode::NoCertificate);
        match crate::cover::spin_status(m, a, d)? {
            crate::cover::SpinStatus::Spin => reasons.push(ReasonCode::SigmaEquality),
            crate::cover::SpinStatus::Unknown => reasons.push(ReasonCode::NotSpinCase),
        }
        if m.b2_plus() < 2 {
            reasons.push(ReasonCode::B2PlusTooSmall);
        } else if k_base.divisibility() == 1 {
            reasons.push(ReasonCode::NoDivisor);
        }
    }
    if k_base_sq >= 0 {
        reasons.push(ReasonCode::SquareNonnegative);
    }
    reasons.sort();

    let status = if certificate.holds() && k_base_sq < 0 {
        VerdictStatus::Obstructed
    } else {
        VerdictStatus::Inconclusive
    };
    debug_assert_eq!(status == VerdictStatus::Obstructed, reasons.is_empty());

    Ok(ObstructionVerdict {
        status,
        d,
        a: a.clone(),
        b,
        certificate,
        k_base_sq,
        reasons,
    })
}

/// Scans every factorization B = d*A permitted by the divisibility of B
/// (all d >= 2 dividing it, in increasing order).
///
/// Certificate availability is not monotone in d - the parity of d flips
/// the spin condition - so every divisor is tried, not just the largest.
pub fn check_class(m: &Manifold4, b: &HClass) -> Result<ClassCheck> {
    if b.len() != m.rank() {
        return Err(Error::DimensionMismatch {
            what: "class",
            expected: m.rank(),
            found: b.len(),
        });
    }
    if b.is_zero() {
        return Err(Error::ZeroClass);
    }
    let divisibility = b.divisibility();
    let mut verdicts = Vec::new();
    for d in divisors_at_least_two(divisibility) {
        let a = b
            .divided(d)
            .expect("every divisor of the gcd divides all coefficients");
        verdicts.push(check_fixed_divisor(m, &a, d)?);
    }
    Ok(ClassCheck {
        b: b.clone(),
        divisibility,
        adjunction_integer: m.adjunction_integer(b)?,
        adjunction_connected_ok: m.adjunction_connected_ok(b)?,
        verdicts,
    })
}

fn divisors_at_least_two(g: u64) -> Vec<i64> {
    let mut out = Vec::new();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= g {
        if g.is_multiple_of(d) {
            if d >= 2 {
                small.push(d as i64);
            }
            let q = g / d;
            if q != d && q >= 2 {
                large.push(q as i64);
            }
        }
        d += 1;
    }
    out.extend(small);
    large.reverse();
    out.extend(large);
    out
}

/// The vanishing consequence: if B is obstructed on a manifold with
/// b2+ > 1, the Seiberg-Witten invariant of the canonical Spin^c structure
/// twisted by B (first Chern class -K + 2B) is zero.
pub fn sw_vanishing_report(m: &Manifold4, b: &HClass, check: &ClassCheck) -> Result<SWReport> {
    let c1 = HClass::combine(-1, m.canonical_class(), 2, b)?;
    let applicable = m.b2_plus() > 1 && !b.is_zero() && check.is_obstructed();
    let statement = if applicable {
        "Seiberg-Witten invariant of the canonical Spin^c structure twisted by B \
         (c1 = -K + 2B) is zero"
            .to_string()
    } else {
        "no vanishing conclusion (requires b2+ > 1, B != 0, and an obstructed verdict)".to_string()
    };
    Ok(SWReport {
        c1,
        applicable,
        statement,
    })
}

/// One obstructed grid point found by [`search`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchHit {
    pub a: HClass,
    pub d: i64,
    pub verdict: ObstructionVerdict,
}

/// Enumerates every nonzero A supported on `indices` with coefficients in
/// `[-bound, bound]` and every d in `[2, d_max]`, returning the obstructed
/// pairs sorted lexicographically by (A, d).
///
/// A and -A are both searched: the orientation induced by the symplectic
/// form makes them inequivalent. Grid cells are independent pure
/// computations, evaluated in parallel; the sort makes assembly
/// deterministic regardless of execution order.
pub fn search(m: &Manifold4, indices: &[usize], bound: i64, d_max: i64) -> Result<Vec<SearchHit>> {
    if indices.is_empty() {
        return Err(Error::EmptySupport);
    }
    let mut support: Vec<usize> = indices.to_vec();
    support.sort_unstable();
    support.dedup();
    for &i in &support {
        if i >= m.rank() {
            return Err(Error::IndexOutOfRange {
                index: i,
                rank: m.rank(),
            });
        }
    }
    if bound < 1 {
        return Err(Error::InvalidBound { bound });
    }
    if d_max < 2 {
        return Err(Error::InvalidDegree { d: d_max, min: 2 });
    }

    let width = (2 * bound + 1) as usize;
    let cells = width
        .checked_pow(support.len() as u32)
        .ok_or(Error::Overflow {
            context: "search grid size",
        })?;

    let mut hits = (0..cells)
        .into_par_iter()
        .map(|cell| -> Result<Vec<SearchHit>> {
            let mut coeffs = vec![0i64; m.rank()];
            let mut rest = cell;
            for &i in &support {
                coeffs[i] = (rest % width) as i64 - bound;
                rest /= width;
            }
            let a = HClass::new(coeffs);
            if a.is_zero() {
                return Ok(Vec::new());
            }
            let mut out = Vec::new();
            for d in 2..=d_max {
                let verdict = check_fixed_divisor(m, &a, d)?;
                if verdict.status == VerdictStatus::Obstructed {
                    out.push(SearchHit {
                        a: a.clone(),
                        d,
                        verdict,
                    });
                }
            }
            Ok(out)
        })
        .try_reduce(Vec::new, |mut acc, mut v| {
            acc.append(&mut v);
            Ok(acc)
        })?;

    hits.sort_by(|x, y| x.a.cmp(&y.a).then(x.d.cmp(&y.d)));
    Ok(hits)
}
