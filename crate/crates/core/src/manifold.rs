//! The closed-symplectic-4-manifold model: intersection lattice, canonical
//! class, spin flag, and an optional symplectic class.
//!
//! Only the data the obstruction criteria consume is modeled: the form, K,
//! spin, b2+/sigma, and (optionally) the cohomology coordinates of `[omega]`.
//! b1 and torsion are not modeled; the canonical class is required to be
//! characteristic and spin forces an even form, both validated hard at
//! construction.

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lattice::{HClass, Lattice, Sign};
use crate::rational::{format_rational, parse_rational, rational_frac};

/// A closed symplectic 4-manifold, modeled by its intersection lattice,
/// canonical class `K`, spin flag, and optional symplectic class
/// coordinates (in the dual basis, so `<omega, B> = dot(omega, B)`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Manifold4 {
    name: String,
    lattice: Lattice,
    canonical: HClass,
    spin: bool,
    omega: Option<Vec<BigRational>>,
}

impl Manifold4 {
    /// Validates and assembles a manifold model.
    ///
    /// Hard errors: K not characteristic, spin flag on an odd form, length
    /// mismatches. Every downstream criterion silently assumes these hold.
    pub fn new(
        name: impl Into<String>,
        lattice: Lattice,
        canonical: HClass,
        spin: bool,
        omega: Option<Vec<BigRational>>,
    ) -> Result<Manifold4> {
        if canonical.len() != lattice.rank() {
            return Err(Error::DimensionMismatch {
                what: "K",
                expected: lattice.rank(),
                found: canonical.len(),
            });
        }
        if !lattice.is_characteristic(&canonical)? {
            return Err(Error::NonCharacteristicCanonical);
        }
        if spin && !lattice.is_even() {
            return Err(Error::SpinOddForm);
        }
        if let Some(w) = &omega {
            if w.len() != lattice.rank() {
                return Err(Error::DimensionMismatch {
                    what: "omega",
                    expected: lattice.rank(),
                    found: w.len(),
                });
            }
        }
        Ok(Manifold4 {
            name: name.into(),
            lattice,
            canonical,
            spin,
            omega,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn canonical_class(&self) -> &HClass {
        &self.canonical
    }

    pub fn spin(&self) -> bool {
        self.spin
    }

    pub fn omega(&self) -> Option<&[BigRational]> {
        self.omega.as_deref()
    }

    pub fn rank(&self) -> usize {
        self.lattice.rank()
    }

    pub fn sigma(&self) -> i64 {
        self.lattice.signature().sigma()
    }

    pub fn b2_plus(&self) -> u32 {
        self.lattice.signature().b_plus
    }

    pub fn b2_minus(&self) -> u32 {
        self.lattice.signature().b_minus
    }

    /// The adjunction integer `K.B + B^2` (even because K is
    /// characteristic). For a connected embedded symplectic surface of genus
    /// g in class B it equals 2g-2.
    pub fn adjunction_integer(&self, b: &HClass) -> Result<i64> {
        let kb = self.lattice.pair(&self.canonical, b)?;
        let bb = self.lattice.square(b)?;
        kb.checked_add(bb).ok_or(Error::Overflow {
            context: "adjunction integer",
        })
    }

    /// False means B admits no connected embedded symplectic representative
    /// (the adjunction integer would be a genus 2g-2 < -2).
    pub fn adjunction_connected_ok(&self, b: &HClass) -> Result<bool> {
        Ok(self.adjunction_integer(b)? >= -2)
    }

    /// `<omega, B> > 0`, a necessary condition for B to be represented by a
    /// symplectic surface. `None` when no symplectic class is recorded.
    pub fn omega_positive(&self, b: &HClass) -> Result<Option<bool>> {
        let Some(w) = &self.omega else {
            return Ok(None);
        };
        if b.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                what: "class",
                expected: self.rank(),
                found: b.len(),
            });
        }
        let mut dot = BigRational::zero();
        for (wi, &bi) in w.iter().zip(b.coeffs()) {
            dot += wi * BigRational::from(num_bigint::BigInt::from(bi));
        }
        Ok(Some(dot.is_positive()))
    }

    /// Blow-up: adjoin a `<-1>` summand spanned by the exceptional class E
    /// (the new last basis vector), set `K <- K + E`, drop spin. A recorded
    /// omega is extended so that `<omega, E> > 0` (exceptional spheres are
    /// symplectic); the magnitude 1/1000 of the smallest nonzero coordinate
    /// is a modeling convenience only.
    pub fn blow_up(&self) -> Manifold4 {
        let lattice = self.lattice.direct_sum(&Lattice::unit(Sign::Minus));
        let mut k = self.canonical.coeffs().to_vec();
        k.push(1);
        let omega = self.omega.as_ref().map(|w| {
            let mut min: Option<BigRational> = None;
            for wi in w {
                if !wi.is_zero() {
                    let a = wi.abs();
                    min = Some(match min {
                        Some(m) if m <= a => m,
                        _ => a,
                    });
                }
            }
            let eps = min.unwrap_or_else(|| rational_frac(1, 1)) * rational_frac(1, 1000);
            let mut out = w.clone();
            out.push(eps);
            out
        });
        Manifold4::new(
            format!("{}#CP2bar", self.name),
            lattice,
            HClass::new(k),
            false,
            omega,
        )
        .expect("blow-up of a valid manifold is valid")
    }

    /// The exceptional class of the last blow-up: the final basis vector.
    pub fn exceptional_class(&self) -> HClass {
        HClass::basis(self.rank(), self.rank() - 1)
    }

    /// K3 surface: 3H + 2E8(-1), K = 0, spin.
    pub fn k3() -> Manifold4 {
        let h = Lattice::hyperbolic();
        let e8m = Lattice::e8(Sign::Minus);
        let l = h
            .direct_sum(&h)
            .direct_sum(&h)
            .direct_sum(&e8m)
            .direct_sum(&e8m);
        let rank = l.rank();
        Manifold4::new("K3", l, HClass::zero(rank), true, None).expect("K3 preset is valid")
    }

    /// 4-torus: 3H, K = 0, spin. (b1 is not modeled.)
    pub fn t4() -> Manifold4 {
        let h = Lattice::hyperbolic();
        let l = h.direct_sum(&h).direct_sum(&h);
        Manifold4::new("T4", l, HClass::zero(6), true, None).expect("T4 preset is valid")
    }

    /// Complex projective plane: <1>, K = -3h.
    pub fn cp2() -> Manifold4 {
        Manifold4::new(
            "CP2",
            Lattice::unit(Sign::Plus),
            HClass::new(vec![-3]),
            false,
            None,
        )
        .expect("CP2 preset is valid")
    }

    /// S2 x S2: H, K = (-2,-2), spin.
    pub fn s2xs2() -> Manifold4 {
        Manifold4::new(
            "S2xS2",
            Lattice::hyperbolic(),
            HClass::new(vec![-2, -2]),
            true,
            None,
        )
        .expect("S2xS2 preset is valid")
    }

    /// Looks up a preset by its CLI name.
    pub fn preset(name: &str) -> Option<Manifold4> {
        match name {
            "k3" => Some(Manifold4::k3()),
            "t4" => Some(Manifold4::t4()),
            "cp2" => Some(Manifold4::cp2()),
            "s2xs2" => Some(Manifold4::s2xs2()),
            _ => None,
        }
    }

    /// Returns a copy with the symplectic class coordinates set.
    pub fn with_omega(&self, omega: Vec<BigRational>) -> Result<Manifold4> {
        Manifold4::new(
            self.name.clone(),
            self.lattice.clone(),
            self.canonical.clone(),
            self.spin,
            Some(omega),
        )
    }
}

/// Wire form of the manifold description file:
/// `{"name", "gram", "K", "spin", "omega"?}` with rationals as "p/q".
#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ManifoldWire {
    name: String,
    gram: Vec<Vec<i64>>,
    #[serde(rename = "K")]
    k: Vec<i64>,
    spin: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    omega: Option<Vec<String>>,
}

impl Serialize for Manifold4 {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        ManifoldWire {
            name: self.name.clone(),
            gram: self.lattice.gram().to_vec(),
            k: self.canonical.coeffs().to_vec(),
            spin: self.spin,
            omega: self
                .omega
                .as_ref()
                .map(|w| w.iter().map(format_rational).collect()),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Manifold4 {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let wire = ManifoldWire::deserialize(deserializer)?;
        let lattice = Lattice::new(wire.gram).map_err(D::Error::custom)?;
        let omega = wire
            .omega
            .map(|entries| {
                entries
                    .iter()
                    .enumerate()
                    .map(|(i, s)| parse_rational(s, i))
                    .collect::<Result<Vec<_>>>()
            })
            .transpose()
            .map_err(D::Error::custom)?;
        Manifold4::new(wire.name, lattice, HClass::new(wire.k), wire.spin, omega)
            .map_err(D::Error::custom)
    }
}
