//! Independent oracles for the integration suites.
//!
//! Nothing here calls the implementation paths it is used to check: inertia
//! comes from the characteristic polynomial (Faddeev-LeVerrier, exact
//! integer coefficients) and Descartes' rule of signs, which is exact for
//! symmetric matrices since all eigenvalues are real; the branched-cover
//! signature is recomputed with arbitrary-precision rationals straight from
//! the displayed formula.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use symsurf::{HClass, Lattice};

/// Characteristic polynomial of an integer matrix, leading coefficient
/// first. Exact: the Faddeev-LeVerrier divisions are exact over the
/// integers, tracked here in rationals and checked integral.
pub fn charpoly(gram: &[Vec<i64>]) -> Vec<BigInt> {
    let n = gram.len();
    let a: Vec<Vec<BigRational>> = gram
        .iter()
        .map(|r| r.iter().map(|&v| big(v)).collect())
        .collect();
    let mut coeffs: Vec<BigRational> = vec![BigRational::one()];
    let mut m: Vec<Vec<BigRational>> = identity(n);
    for k in 1..=n {
        let am = matmul(&a, &m);
        let tr: BigRational = (0..n).map(|i| am[i][i].clone()).sum();
        let ck = -tr / big(k as i64);
        m = am;
        for i in 0..n {
            m[i][i] += ck.clone();
        }
        coeffs.push(ck);
    }
    coeffs
        .into_iter()
        .map(|c| {
            assert!(c.denom().is_one(), "char poly coefficient not integral");
            c.numer().clone()
        })
        .collect()
}

fn big(v: i64) -> BigRational {
    BigRational::from(BigInt::from(v))
}

fn identity(n: usize) -> Vec<Vec<BigRational>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect()
}

fn matmul(a: &[Vec<BigRational>], b: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|l| &a[i][l] * &b[l][j]).sum())
                .collect()
        })
        .collect()
}

fn sign_changes(seq: &[BigInt]) -> usize {
    let signs: Vec<bool> = seq
        .iter()
        .filter(|c| !c.is_zero())
        .map(|c| c.is_positive())
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Inertia `(b+, b-, b0)` by Descartes' rule on the characteristic
/// polynomial. Exact because symmetric matrices have only real eigenvalues.
pub fn descartes_inertia(gram: &[Vec<i64>]) -> (usize, usize, usize) {
    let n = gram.len();
    let cs = charpoly(gram);
    let pos = sign_changes(&cs);
    // p(-x): coefficient of degree n-i flips sign when n-i is odd.
    let flipped: Vec<BigInt> = cs
        .iter()
        .enumerate()
        .map(|(i, c)| {
            if (n - i) % 2 == 1 {
                -c.clone()
            } else {
                c.clone()
            }
        })
        .collect();
    let neg = sign_changes(&flipped);
    (pos, neg, n - pos - neg)
}

/// det(G) recovered from the characteristic polynomial constant term:
/// p(0) = det(-G) = (-1)^n det(G).
pub fn determinant(gram: &[Vec<i64>]) -> BigInt {
    let n = gram.len();
    let c = charpoly(gram).pop().expect("nonempty charpoly");
    if n % 2 == 1 {
        -c
    } else {
        c
    }
}

/// Brute-force characteristic test: `c.x = x.x mod 2` for every x in the
/// box `{-range..range}^rank`.
pub fn brute_characteristic(l: &Lattice, c: &HClass, range: i64) -> bool {
    let rank = l.rank();
    let width = (2 * range + 1) as usize;
    let cells = width.pow(rank as u32);
    for cell in 0..cells {
        let mut rest = cell;
        let mut v = vec![0i64; rank];
        for slot in v.iter_mut() {
            *slot = (rest % width) as i64 - range;
            rest /= width;
        }
        let x = HClass::new(v);
        let px = l.pair(c, &x).unwrap();
        let xx = l.square(&x).unwrap();
        if (px - xx) % 2 != 0 {
            return false;
        }
    }
    true
}

/// Branched-cover signature straight from the formula with exact rationals:
/// `d * (sigma - (d^2-1)/3 * A^2)`. Returns `None` when not an integer.
pub fn rational_sigma_bar(d: i64, sigma: i64, a_sq: i64) -> Option<i64> {
    let v = big(d)
        * (big(sigma) - BigRational::new(BigInt::from(d * d - 1), BigInt::from(3)) * big(a_sq));
    if v.denom().is_one() {
        Some(i64::try_from(v.numer().clone()).expect("fits i64"))
    } else {
        None
    }
}

/// Expanded form of the cover's canonical square:
/// `d * (K^2 + 2(d-1) K.A + (d-1)^2 A^2)`.
pub fn expanded_cover_k_sq(k_sq: i64, ka: i64, a_sq: i64, d: i64) -> i64 {
    d * (k_sq + 2 * (d - 1) * ka + (d - 1) * (d - 1) * a_sq)
}

/// Deterministic RNG for test reproducibility.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random unimodular matrix: a short product of elementary row additions
/// and sign flips. Entries stay small.
pub fn random_unimodular(rng: &mut ChaCha8Rng, n: usize) -> Vec<Vec<i64>> {
    let mut u = vec![vec![0i64; n]; n];
    for (i, row) in u.iter_mut().enumerate() {
        row[i] = 1;
    }
    if n < 2 {
        return u;
    }
    for _ in 0..6 {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n);
        while j == i {
            j = rng.gen_range(0..n);
        }
        let k = rng.gen_range(-2i64..=2);
        // row_i += k * row_j
        for c in 0..n {
            u[i][c] += k * u[j][c];
        }
        if rng.gen_bool(0.3) {
            for c in 0..n {
                u[i][c] = -u[i][c];
            }
        }
    }
    u
}

/// Congruence transform `U^T G U`, exact in i128 then narrowed.
pub fn conjugate(gram: &[Vec<i64>], u: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = gram.len();
    let mut gu = vec![vec![0i128; n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut s = 0i128;
            for l in 0..n {
                s += gram[i][l] as i128 * u[l][j] as i128;
            }
            gu[i][j] = s;
        }
    }
    let mut out = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut s = 0i128;
            for l in 0..n {
                s += u[l][i] as i128 * gu[l][j];
            }
            out[i][j] = i64::try_from(s).expect("conjugated entry fits i64");
        }
    }
    out
}

/// Random class with coefficients in `[-range, range]`.
pub fn random_class(rng: &mut ChaCha8Rng, rank: usize, range: i64) -> HClass {
    HClass::new((0..rank).map(|_| rng.gen_range(-range..=range)).collect())
}
