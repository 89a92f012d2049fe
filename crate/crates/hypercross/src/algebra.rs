//! Cayley-Dickson hypercomplex arithmetic.
//!
//! Level k holds elements with 2^k real coefficients: reals (k=0), complexes
//! (k=1), quaternions (k=2), octonions (k=3), sedenions (k=4) and one level
//! beyond (k=5). The product doubles recursively with the convention
//!
//! ```text
//! (a, b)(c, d) = (ac - conj(d) b,  da + b conj(c))
//! ```
//!
//! where an element of level k is split into two level-(k-1) halves. Under
//! this convention the quaternion units satisfy e1 e2 = e3, e2 e3 = e1,
//! e3 e1 = e2 and e_i^2 = -1, and the octonion units anticommute; both facts
//! are pinned by tests rather than assumed.

use crate::error::{Error, Result};

/// Highest supported Cayley-Dickson level. Levels above this are rejected,
/// not silently allowed.
pub const MAX_LEVEL: usize = 5;

/// An element of the level-k Cayley-Dickson algebra: 2^k real coefficients,
/// `coeffs[0]` the real part and `coeffs[i]` the coefficient of the basis
/// unit `e_i`.
#[derive(Debug, Clone, PartialEq)]
pub struct Hypercomplex {
    level: usize,
    coeffs: Vec<f64>,
}

impl Hypercomplex {
    /// Builds an element from raw coefficients. The length must be exactly
    /// `2^level` and the level at most [`MAX_LEVEL`].
    pub fn new(level: usize, coeffs: Vec<f64>) -> Result<Self> {
        check_level(level)?;
        let expected = 1usize << level;
        if coeffs.len() != expected {
            return Err(Error::CoefficientCount {
                expected,
                got: coeffs.len(),
            });
        }
        Ok(Self { level, coeffs })
    }

    pub fn zero(level: usize) -> Result<Self> {
        check_level(level)?;
        Ok(Self {
            level,
            coeffs: vec![0.0; 1 << level],
        })
    }

    /// The basis unit `e_index` at the given level.
    pub fn basis(level: usize, index: usize) -> Result<Self> {
        check_level(level)?;
        let dim = 1usize << level;
        if index >= dim {
            return Err(Error::BasisIndex { index, dim });
        }
        let mut coeffs = vec![0.0; dim];
        coeffs[index] = 1.0;
        Ok(Self { level, coeffs })
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn re(&self) -> f64 {
        self.coeffs[0]
    }

    /// Coefficients of the imaginary units, `coeffs[1..]`.
    pub fn im(&self) -> &[f64] {
        &self.coeffs[1..]
    }

    /// Cayley-Dickson product. Both operands must have the same level.
    pub fn cd_mul(&self, other: &Hypercomplex) -> Result<Hypercomplex> {
        if self.level != other.level {
            return Err(Error::LevelMismatch {
                left: self.level,
                right: other.level,
            });
        }
        Ok(Hypercomplex {
            level: self.level,
            coeffs: cd_mul_slices(&self.coeffs, &other.coeffs),
        })
    }

    /// Conjugation: negates every imaginary coefficient.
    pub fn conjugate(&self) -> Hypercomplex {
        let mut coeffs = self.coeffs.clone();
        for c in &mut coeffs[1..] {
            *c = -*c;
        }
        Hypercomplex {
            level: self.level,
            coeffs,
        }
    }

    /// Squared norm: the sum of squared coefficients. Equals the real part
    /// of `a * conjugate(a)` at every supported level.
    pub fn norm_sq(&self) -> f64 {
        self.coeffs.iter().map(|c| c * c).sum()
    }

    pub fn add(&self, other: &Hypercomplex) -> Result<Hypercomplex> {
        if self.level != other.level {
            return Err(Error::LevelMismatch {
                left: self.level,
                right: other.level,
            });
        }
        Ok(Hypercomplex {
            level: self.level,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Hypercomplex) -> Result<Hypercomplex> {
        if self.level != other.level {
            return Err(Error::LevelMismatch {
                left: self.level,
                right: other.level,
            });
        }
        Ok(Hypercomplex {
            level: self.level,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn scale(&self, s: f64) -> Hypercomplex {
        Hypercomplex {
            level: self.level,
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }
}

fn check_level(level: usize) -> Result<()> {
    if level > MAX_LEVEL {
        Err(Error::LevelOutOfRange {
            level,
            max: MAX_LEVEL,
        })
    } else {
        Ok(())
    }
}

fn cd_mul_slices(a: &[f64], b: &[f64]) -> Vec<f64> {
    let n = a.len();
    if n == 1 {
        return vec![a[0] * b[0]];
    }
    let h = n / 2;
    let (al, ah) = a.split_at(h);
    let (bl, bh) = b.split_at(h);
    let conj = |x: &[f64]| -> Vec<f64> {
        let mut v = x.to_vec();
        for c in &mut v[1..] {
            *c = -*c;
        }
        v
    };
    let ac = cd_mul_slices(al, bl);
    let db_conj_b = cd_mul_slices(&conj(bh), ah);
    let da = cd_mul_slices(bh, al);
    let bc_conj = cd_mul_slices(ah, &conj(bl));
    let mut out = Vec::with_capacity(n);
    for i in 0..h {
        out.push(ac[i] - db_conj_b[i]);
    }
    for i in 0..h {
        out.push(da[i] + bc_conj[i]);
    }
    out
}

/// Exact integer Cayley-Dickson product, used to build basis tables without
/// any floating-point rounding.
fn cd_mul_int(a: &[i64], b: &[i64]) -> Vec<i64> {
    let n = a.len();
    if n == 1 {
        return vec![a[0] * b[0]];
    }
    let h = n / 2;
    let (al, ah) = a.split_at(h);
    let (bl, bh) = b.split_at(h);
    let conj = |x: &[i64]| -> Vec<i64> {
        let mut v = x.to_vec();
        for c in &mut v[1..] {
            *c = -*c;
        }
        v
    };
    let ac = cd_mul_int(al, bl);
    let db_conj_b = cd_mul_int(&conj(bh), ah);
    let da = cd_mul_int(bh, al);
    let bc_conj = cd_mul_int(ah, &conj(bl));
    let mut out = Vec::with_capacity(n);
    for i in 0..h {
        out.push(ac[i] - db_conj_b[i]);
    }
    for i in 0..h {
        out.push(da[i] + bc_conj[i]);
    }
    out
}

/// The product of two basis units: `e_i * e_j = sign * e_index`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BasisProduct {
    pub sign: i8,
    pub index: usize,
}

/// Precomputed basis multiplication table for one level, built in exact
/// integer arithmetic.
#[derive(Debug, Clone)]
pub struct BasisTable {
    level: usize,
    dim: usize,
    entries: Vec<BasisProduct>,
}

impl BasisTable {
    pub fn new(level: usize) -> Result<Self> {
        check_level(level)?;
        let dim = 1usize << level;
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let mut ei = vec![0i64; dim];
                let mut ej = vec![0i64; dim];
                ei[i] = 1;
                ej[j] = 1;
                let p = cd_mul_int(&ei, &ej);
                let nonzero: Vec<(usize, i64)> = p
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| **v != 0)
                    .map(|(k, v)| (k, *v))
                    .collect();
                // The product of two basis units is always a single signed unit.
                assert_eq!(nonzero.len(), 1);
                let (index, value) = nonzero[0];
                assert!(value == 1 || value == -1);
                entries.push(BasisProduct {
                    sign: value as i8,
                    index,
                });
            }
        }
        Ok(Self {
            level,
            dim,
            entries,
        })
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Looks up `e_i * e_j`.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> BasisProduct {
        self.entries[i * self.dim + j]
    }

    /// Bilinear product expansion over the precomputed table. Agrees with
    /// [`Hypercomplex::cd_mul`] up to floating-point summation order.
    pub fn mul(&self, a: &Hypercomplex, b: &Hypercomplex) -> Result<Hypercomplex> {
        if a.level() != b.level() {
            return Err(Error::LevelMismatch {
                left: a.level(),
                right: b.level(),
            });
        }
        if a.level() != self.level {
            return Err(Error::TableLevelMismatch {
                table: self.level,
                operand: a.level(),
            });
        }
        let mut coeffs = vec![0.0; self.dim];
        for i in 0..self.dim {
            let ai = a.coeffs[i];
            if ai == 0.0 {
                continue;
            }
            for j in 0..self.dim {
                let bj = b.coeffs[j];
                if bj == 0.0 {
                    continue;
                }
                let p = self.get(i, j);
                coeffs[p.index] += f64::from(p.sign) * ai * bj;
            }
        }
        Ok(Hypercomplex {
            level: self.level,
            coeffs,
        })
    }
}

/// Exhaustively scans sedenion basis pairs `(e_i + e_j)(e_k - e_l)` for an
/// exact-zero product. Returns the first witness found in scan order.
pub fn sedenion_zero_divisor() -> Option<(usize, usize, usize, usize)> {
    let table = BasisTable::new(4).expect("level 4 is supported");
    for i in 1..16 {
        for j in (i + 1)..16 {
            for k in 1..16 {
                for l in 1..16 {
                    if k == l {
                        continue;
                    }
                    // (e_i + e_j)(e_k - e_l) expanded over the exact table
                    let mut acc = [0i64; 16];
                    for (a, b, s) in [(i, k, 1), (i, l, -1), (j, k, 1), (j, l, -1)] {
                        let p = table.get(a, b);
                        acc[p.index] += i64::from(p.sign) * s;
                    }
                    if acc.iter().all(|v| *v == 0) {
                        return Some((i, j, k, l));
                    }
                }
            }
        }
    }
    None
}

/// A violation of `norm_sq(ab) = norm_sq(a) norm_sq(b)` found by the basis
/// scan: `a = e_i + e_j` and `b = e_k + e_l` with the indices below.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormFailure {
    pub a: (usize, usize),
    pub b: (usize, usize),
    pub product_norm_sq: f64,
    pub norms_product: f64,
}

/// Exhaustively scans sums of sedenion basis pairs for a violation of
/// `norm_sq(ab) = norm_sq(a) norm_sq(b)`, returning the largest one.
pub fn sedenion_norm_failure() -> Option<NormFailure> {
    let table = BasisTable::new(4).expect("level 4 is supported");
    let mut worst: Option<NormFailure> = None;
    for i in 1..16 {
        for j in (i + 1)..16 {
            for k in 1..16 {
                for l in (k + 1)..16 {
                    let mut acc = [0i64; 16];
                    for (a, b) in [(i, k), (i, l), (j, k), (j, l)] {
                        let p = table.get(a, b);
                        acc[p.index] += i64::from(p.sign);
                    }
                    let lhs: i64 = acc.iter().map(|v| v * v).sum();
                    let rhs = 4i64; // |e_i + e_j|^2 * |e_k + e_l|^2
                    if lhs != rhs {
                        let gap = (lhs - rhs).abs() as f64;
                        let better = match &worst {
                            None => true,
                            Some(w) => gap > (w.product_norm_sq - w.norms_product).abs(),
                        };
                        if better {
                            worst = Some(NormFailure {
                                a: (i, j),
                                b: (k, l),
                                product_norm_sq: lhs as f64,
                                norms_product: rhs as f64,
                            });
                        }
                    }
                }
            }
        }
    }
    worst
}
