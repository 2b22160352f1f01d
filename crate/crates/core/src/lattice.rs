//! Integral symmetric bilinear forms and exact arithmetic on them.
//!
//! A [`Lattice`] is a finite-rank free abelian group with a symmetric,
//! nondegenerate integer pairing given by a Gram matrix; an [`HClass`] is an
//! integer coefficient vector over a fixed basis of that lattice. Everything
//! is computed exactly: intersection products with checked `i128`
//! intermediates, the signature by congruence diagonalization over the
//! rationals. No floating point anywhere.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Coefficient vector of a second-homology class over a fixed lattice basis.
///
/// The class is identified with its Poincaré dual throughout: on the
/// torsion-free model both live in the same coordinate lattice.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HClass(pub Vec<i64>);

impl HClass {
    pub fn new(coeffs: Vec<i64>) -> Self {
        HClass(coeffs)
    }

    pub fn zero(rank: usize) -> Self {
        HClass(vec![0; rank])
    }

    /// The `i`-th basis class of a rank-`rank` lattice.
    pub fn basis(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        HClass(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// gcd of the coefficients; 0 for the zero class, with the documented
    /// meaning "divisible by every k >= 2".
    pub fn divisibility(&self) -> u64 {
        self.0
            .iter()
            .fold(0u64, |g, &c| num_integer::gcd(g, c.unsigned_abs()))
    }

    /// `ca * a + cb * b`, overflow-checked.
    pub fn combine(ca: i64, a: &HClass, cb: i64, b: &HClass) -> Result<HClass> {
        if a.len() != b.len() {
            return Err(Error::DimensionMismatch {
                what: "class",
                expected: a.len(),
                found: b.len(),
            });
        }
        a.0.iter()
            .zip(&b.0)
            .map(|(&x, &y)| {
                let v = (ca as i128 * x as i128)
                    .checked_add(cb as i128 * y as i128)
                    .ok_or(Error::Overflow {
                        context: "class combination",
                    })?;
                narrow(v, "class combination")
            })
            .collect::<Result<Vec<i64>>>()
            .map(HClass)
    }

    /// `k * self`, overflow-checked.
    pub fn scaled(&self, k: i64) -> Result<HClass> {
        HClass::combine(k, self, 0, self)
    }

    /// Exact componentwise division; `None` if some coefficient is not
    /// divisible by `d`.
    pub fn divided(&self, d: i64) -> Option<HClass> {
        debug_assert!(d != 0);
        self.0
            .iter()
            .map(|&c| if c % d == 0 { Some(c / d) } else { None })
            .collect::<Option<Vec<i64>>>()
            .map(HClass)
    }
}

/// Inertia of a nondegenerate form: ranks of maximal positive- and
/// negative-definite subspaces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Signature {
    pub b_plus: u32,
    pub b_minus: u32,
}

impl Signature {
    pub fn sigma(&self) -> i64 {
        self.b_plus as i64 - self.b_minus as i64
    }

    pub fn rank(&self) -> usize {
        (self.b_plus + self.b_minus) as usize
    }
}

/// Sign choice for the definite building blocks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn factor(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// A nondegenerate integral symmetric bilinear form, e.g. the intersection
/// form on H2 of a closed oriented 4-manifold (modulo torsion).
///
/// Symmetry and nondegeneracy are validated at construction; the signature is
/// computed once, exactly, and cached. Values are immutable afterwards.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lattice {
    rank: usize,
    gram: Vec<Vec<i64>>,
    sig: Signature,
}

impl Lattice {
    /// Builds a lattice from a Gram matrix, validating symmetry and
    /// nondegeneracy.
    pub fn new(gram: Vec<Vec<i64>>) -> Result<Lattice> {
        let rank = gram.len();
        for (i, row) in gram.iter().enumerate() {
            if row.len() != rank {
                return Err(Error::NonSquareGram {
                    row: i,
                    expected: rank,
                    found: row.len(),
                });
            }
        }
        for i in 0..rank {
            for j in (i + 1)..rank {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::NonSymmetricGram { row: i, col: j });
                }
            }
        }
        let (b_plus, b_minus, b_zero) = rational_inertia(&gram);
        if b_zero != 0 {
            return Err(Error::DegenerateForm);
        }
        Ok(Lattice {
            rank,
            gram,
            sig: Signature {
                b_plus: b_plus as u32,
                b_minus: b_minus as u32,
            },
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    /// The rank-1 form `<+1>` or `<-1>`.
    pub fn unit(sign: Sign) -> Lattice {
        Lattice::new(vec![vec![sign.factor()]]).expect("rank-1 unit form is valid")
    }

    /// The hyperbolic plane `H = [[0,1],[1,0]]`.
    pub fn hyperbolic() -> Lattice {
        Lattice::new(vec![vec![0, 1], vec![1, 0]]).expect("hyperbolic form is valid")
    }

    /// The E8 form (even, unimodular, definite; diagonal 2, negated for
    /// `Sign::Minus`). Basis ordering: a 7-chain with the branch node
    /// attached at index 4.
    pub fn e8(sign: Sign) -> Lattice {
        let s = sign.factor();
        let mut g = vec![vec![0i64; 8]; 8];
        for (i, row) in g.iter_mut().enumerate() {
            row[i] = 2 * s;
        }
        for &(a, b) in &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7)] {
            g[a][b] = -s;
            g[b][a] = -s;
        }
        Lattice::new(g).expect("E8 form is valid")
    }

    /// Block-diagonal direct sum. Signature is additive.
    pub fn direct_sum(&self, other: &Lattice) -> Lattice {
        let n = self.rank + other.rank;
        let mut g = vec![vec![0i64; n]; n];
        for i in 0..self.rank {
            g[i][..self.rank].copy_from_slice(&self.gram[i]);
        }
        for i in 0..other.rank {
            g[self.rank + i][self.rank..].copy_from_slice(&other.gram[i]);
        }
        Lattice {
            rank: n,
            gram: g,
            sig: Signature {
                b_plus: self.sig.b_plus + other.sig.b_plus,
                b_minus: self.sig.b_minus + other.sig.b_minus,
            },
        }
    }

    fn check_dim(&self, x: &HClass) -> Result<()> {
        if x.len() != self.rank {
            return Err(Error::DimensionMismatch {
                what: "class",
                expected: self.rank,
                found: x.len(),
            });
        }
        Ok(())
    }

    /// Intersection product `x . y = x^T gram y`. Symmetric in `x` and `y`.
    pub fn pair(&self, x: &HClass, y: &HClass) -> Result<i64> {
        self.check_dim(x)?;
        self.check_dim(y)?;
        let mut acc: i128 = 0;
        for (i, &xi) in x.0.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.0.iter().enumerate() {
                if yj == 0 || self.gram[i][j] == 0 {
                    continue;
                }
                let term = (xi as i128 * self.gram[i][j] as i128)
                    .checked_mul(yj as i128)
                    .ok_or(Error::Overflow {
                        context: "intersection product",
                    })?;
                acc = acc.checked_add(term).ok_or(Error::Overflow {
                    context: "intersection product",
                })?;
            }
        }
        narrow(acc, "intersection product")
    }

    /// Self-intersection `x . x`.
    pub fn square(&self, x: &HClass) -> Result<i64> {
        self.pair(x, x)
    }

    /// Cached exact inertia of the form.
    pub fn signature(&self) -> Signature {
        self.sig
    }

    /// True iff every square is even, i.e. every diagonal Gram entry is even
    /// (x^2 = sum x_i x_j g_ij = sum x_i^2 g_ii mod 2).
    pub fn is_even(&self) -> bool {
        (0..self.rank).all(|i| self.gram[i][i] % 2 == 0)
    }

    /// True iff `c . x = x . x (mod 2)` for all `x`. By linearity of both
    /// sides mod 2 it suffices to test basis vectors: `(gram c)_i = g_ii
    /// (mod 2)` for every `i`.
    pub fn is_characteristic(&self, c: &HClass) -> Result<bool> {
        self.check_dim(c)?;
        for i in 0..self.rank {
            let mut row: i128 = 0;
            for (j, &cj) in c.0.iter().enumerate() {
                row = row
                    .checked_add(self.gram[i][j] as i128 * cj as i128)
                    .ok_or(Error::Overflow {
                        context: "characteristic test",
                    })?;
            }
            if (row - self.gram[i][i] as i128) % 2 != 0 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// gcd of the entries of `c`; see [`HClass::divisibility`].
    pub fn divisibility(&self, c: &HClass) -> Result<u64> {
        self.check_dim(c)?;
        Ok(c.divisibility())
    }
}

fn narrow(v: i128, context: &'static str) -> Result<i64> {
    i64::try_from(v).map_err(|_| Error::Overflow { context })
}

/// Exact inertia `(b+, b-, b0)` of a symmetric integer matrix by congruence
/// diagonalization with rational pivots.
///
/// Row/column operations are always applied as a congruence (same operation
/// on rows and columns), so the diagonal signs at the end are the inertia by
/// Sylvester's law. Zero diagonals are handled by the standard pivot trick:
/// swap in a later nonzero diagonal if one exists, otherwise add a row and
/// column with a nonzero off-diagonal entry to create one.
fn rational_inertia(gram: &[Vec<i64>]) -> (usize, usize, usize) {
    let n = gram.len();
    let mut m: Vec<Vec<BigRational>> = gram
        .iter()
        .map(|row| {
            row.iter()
                .map(|&v| BigRational::from(BigInt::from(v)))
                .collect()
        })
        .collect();

    let (mut pos, mut neg, mut zero) = (0usize, 0usize, 0usize);
    for k in 0..n {
        if m[k][k].is_zero() {
            if let Some(j) = ((k + 1)..n).find(|&j| !m[j][j].is_zero()) {
                m.swap(k, j);
                for row in m.iter_mut() {
                    row.swap(k, j);
                }
            } else if let Some(j) = ((k + 1)..n).find(|&j| !m[k][j].is_zero()) {
                // All remaining diagonal entries vanish; m[k][j] != 0 gives
                // new m[k][k] = 2 m[k][j] after the congruence.
                for c in 0..n {
                    let t = m[j][c].clone();
                    m[k][c] += t;
                }
                for row in m.iter_mut() {
                    let t = row[j].clone();
                    row[k] += t;
                }
            } else {
                // Row k is zero on the undiagonalized block: radical vector.
                zero += 1;
                continue;
            }
        }
        let pivot = m[k][k].clone();
        if pivot.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        for i in (k + 1)..n {
            if m[i][k].is_zero() {
                continue;
            }
            let f = &m[i][k] / &pivot;
            for c in 0..n {
                let t = &f * &m[k][c];
                m[i][c] -= t;
            }
            for row in m.iter_mut() {
                let t = &f * &row[k];
                row[i] -= t;
            }
        }
    }
    (pos, neg, zero)
}
