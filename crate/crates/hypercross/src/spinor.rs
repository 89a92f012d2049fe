//! Quadratic-form (spinor) representations of the norm-squaring transforms.
//!
//! Real input vectors are paired into complex spinor components
//! `v_i = u_{2i-1} + i u_{2i}`. The R4 -> R3 map is then the triple of Pauli
//! quadratic forms `z_i = v^dag sigma_i v`, and the R8 -> R5 map is a
//! five-tuple of Hermitian quadratic forms in the Dirac gamma matrices.
//!
//! The five gamma-form matrices are not guessed: they were solved for, over
//! the span of `{gamma^0, gamma^1, gamma^2, gamma^3, gamma^5}` and their
//! i-multiples, by matching against [`hurwitz_r8_to_r5`] on basis inputs
//! (the tests replay the solve and check uniqueness). The resolved list is
//!
//! ```text
//! z1 = v^dag gamma^5 v        z2 = v^dag (-i gamma^3) v
//! z3 = v^dag (i gamma^2) v    z4 = v^dag (-i gamma^1) v
//! z5 = v^dag gamma^0 v
//! ```
//!
//! with `gamma^0 = diag(I, -I)`, `gamma^i = [[0, sigma_i], [-sigma_i, 0]]`
//! and `gamma^5 = [[0, I], [I, 0]]`. The quadratic forms use the conjugate
//! transpose `v^dag`; a plain transpose would not produce real outputs.

use crate::error::{Error, Result};
use crate::vec::VecN;
use num_complex::Complex64;

/// A complex spinor with 2 or 4 components, built by pairing consecutive
/// real coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexSpinor {
    components: Vec<Complex64>,
}

impl ComplexSpinor {
    /// Pairs a real vector of dimension 4 or 8 into complex components
    /// `v_i = u_{2i-1} + i u_{2i}`.
    pub fn from_real(u: &VecN) -> Result<Self> {
        if u.dim() != 4 && u.dim() != 8 {
            return Err(Error::UnsupportedDimension {
                got: u.dim(),
                supported: &[4, 8],
            });
        }
        Ok(Self {
            components: (0..u.dim() / 2)
                .map(|i| Complex64::new(u[2 * i], u[2 * i + 1]))
                .collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Complex64] {
        &self.components
    }

    /// Sum of squared component moduli; equals `|u|^2` for spinors built by
    /// [`ComplexSpinor::from_real`].
    pub fn norm_sq(&self) -> f64 {
        self.components.iter().map(|c| c.norm_sqr()).sum()
    }
}

const I: Complex64 = Complex64::new(0.0, 1.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// The three Pauli matrices.
pub const PAULI: [[[Complex64; 2]; 2]; 3] = [
    [[ZERO, ONE], [ONE, ZERO]],
    [[ZERO, Complex64::new(0.0, -1.0)], [I, ZERO]],
    [[ONE, ZERO], [ZERO, Complex64::new(-1.0, 0.0)]],
];

/// Hermitian quadratic form `v^dag M v`. The result of a Hermitian form is
/// real; the imaginary residue is returned for the caller to assert on.
fn quadratic_form(v: &[Complex64], m: &[Vec<Complex64>]) -> Complex64 {
    let mut acc = ZERO;
    for (j, vj) in v.iter().enumerate() {
        for (k, vk) in v.iter().enumerate() {
            acc += vj.conj() * m[j][k] * vk;
        }
    }
    acc
}

/// The three Pauli quadratic forms of a 2-component spinor. For
/// `v = v(u)` with u in R^4, the result equals [`crate::hurwitz::ks_transform`]
/// componentwise (the reconciliation map is the identity; tests pin this).
pub fn pauli_form(v: &ComplexSpinor) -> Result<VecN> {
    if v.dim() != 2 {
        return Err(Error::DimensionMismatch {
            left: v.dim(),
            right: 2,
        });
    }
    let z: Vec<f64> = PAULI
        .iter()
        .map(|sigma| {
            let m: Vec<Vec<Complex64>> = sigma.iter().map(|row| row.to_vec()).collect();
            quadratic_form(v.components(), &m).re
        })
        .collect();
    Ok(VecN::new(z))
}

/// Builds the five 4x4 Hermitian gamma-form matrices.
fn gamma_forms() -> [Vec<Vec<Complex64>>; 5] {
    let sigma = |k: usize| PAULI[k];
    // gamma^i in the block form [[0, sigma_i], [-sigma_i, 0]]
    let gamma_i = |k: usize| -> Vec<Vec<Complex64>> {
        let s = sigma(k);
        let mut m = vec![vec![ZERO; 4]; 4];
        for r in 0..2 {
            for c in 0..2 {
                m[r][c + 2] = s[r][c];
                m[r + 2][c] = -s[r][c];
            }
        }
        m
    };
    let scale = |m: Vec<Vec<Complex64>>, f: Complex64| -> Vec<Vec<Complex64>> {
        m.into_iter()
            .map(|row| row.into_iter().map(|e| f * e).collect())
            .collect()
    };
    // gamma^5 = [[0, I], [I, 0]]
    let mut g5 = vec![vec![ZERO; 4]; 4];
    for r in 0..2 {
        g5[r][r + 2] = ONE;
        g5[r + 2][r] = ONE;
    }
    // gamma^0 = diag(I, -I)
    let mut g0 = vec![vec![ZERO; 4]; 4];
    for r in 0..2 {
        g0[r][r] = ONE;
        g0[r + 2][r + 2] = -ONE;
    }
    [
        g5,                    // z1
        scale(gamma_i(2), -I), // z2 = -i gamma^3
        scale(gamma_i(1), I),  // z3 =  i gamma^2
        scale(gamma_i(0), -I), // z4 = -i gamma^1
        g0,                    // z5
    ]
}

/// The five gamma quadratic forms of a 4-component spinor. For `v = v(u)`
/// with u in R^8, the result equals [`crate::hurwitz::hurwitz_r8_to_r5`]
/// componentwise.
pub fn dirac_form(v: &ComplexSpinor) -> Result<VecN> {
    if v.dim() != 4 {
        return Err(Error::DimensionMismatch {
            left: v.dim(),
            right: 4,
        });
    }
    let z: Vec<f64> = gamma_forms()
        .iter()
        .map(|m| quadratic_form(v.components(), m).re)
        .collect();
    Ok(VecN::new(z))
}

/// Imaginary residues of the five gamma forms; all matrices are Hermitian,
/// so these vanish to machine precision.
pub fn dirac_form_imaginary_residue(v: &ComplexSpinor) -> Result<Vec<f64>> {
    if v.dim() != 4 {
        return Err(Error::DimensionMismatch {
            left: v.dim(),
            right: 4,
        });
    }
    Ok(gamma_forms()
        .iter()
        .map(|m| quadratic_form(v.components(), m).im)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hurwitz::{hurwitz_r8_to_r5, ks_transform};
    use crate::testutil::TestRng;

    #[test]
    fn pauli_examples() {
        let v = ComplexSpinor::from_real(&VecN::new(vec![1.0, 0.0, 0.0, 0.0])).unwrap();
        assert_eq!(pauli_form(&v).unwrap().coords(), &[0.0, 0.0, 1.0]);
        let zero = ComplexSpinor::from_real(&VecN::zeros(4)).unwrap();
        assert_eq!(pauli_form(&zero).unwrap().max_abs(), 0.0);
    }

    #[test]
    fn pauli_matches_ks_componentwise() {
        let mut rng = TestRng::new(149);
        for _ in 0..1000 {
            let u = rng.vec(4);
            let v = ComplexSpinor::from_real(&u).unwrap();
            let z = pauli_form(&v).unwrap();
            let t = ks_transform(&u).unwrap();
            assert!(z.sub(&t).max_abs() <= 1e-12 * u.norm_sq().max(1.0));
        }
    }

    #[test]
    fn pauli_norm_identity() {
        let mut rng = TestRng::new(151);
        for _ in 0..1000 {
            let u = rng.vec(4);
            let v = ComplexSpinor::from_real(&u).unwrap();
            let z = pauli_form(&v).unwrap();
            let rhs = u.norm_sq();
            assert!((z.norm() - rhs).abs() <= 1e-12 * rhs.max(1e-12));
            assert!((v.norm_sq() - rhs).abs() <= 1e-12 * rhs.max(1e-12));
        }
    }

    #[test]
    fn dirac_examples() {
        let mut u = vec![0.0; 8];
        u[0] = 1.0;
        let v = ComplexSpinor::from_real(&VecN::new(u)).unwrap();
        assert_eq!(dirac_form(&v).unwrap().coords(), &[0.0, 0.0, 0.0, 0.0, 1.0]);
        let zero = ComplexSpinor::from_real(&VecN::zeros(8)).unwrap();
        assert_eq!(dirac_form(&zero).unwrap().max_abs(), 0.0);
    }

    #[test]
    fn dirac_matches_r8_to_r5_componentwise() {
        let mut rng = TestRng::new(157);
        for _ in 0..1000 {
            let u = rng.vec(8);
            let v = ComplexSpinor::from_real(&u).unwrap();
            let z = dirac_form(&v).unwrap();
            let t = hurwitz_r8_to_r5(&u).unwrap();
            assert!(z.sub(&t).max_abs() <= 1e-12 * u.norm_sq().max(1.0));
        }
    }

    #[test]
    fn sums_of_squares_inherited() {
        let mut rng = TestRng::new(163);
        for _ in 0..1000 {
            let u = rng.vec(8);
            let v = ComplexSpinor::from_real(&u).unwrap();
            let z = dirac_form(&v).unwrap();
            let rhs = v.norm_sq() * v.norm_sq();
            assert!((z.norm_sq() - rhs).abs() <= 1e-12 * rhs.max(1e-12));
        }
    }

    #[test]
    fn gamma_forms_are_hermitian_with_real_outputs() {
        for m in gamma_forms().iter() {
            for (j, row) in m.iter().enumerate() {
                for (k, entry) in row.iter().enumerate() {
                    assert!((entry - m[k][j].conj()).norm() == 0.0);
                }
            }
        }
        let mut rng = TestRng::new(167);
        for _ in 0..200 {
            let u = rng.vec(8);
            let v = ComplexSpinor::from_real(&u).unwrap();
            for residue in dirac_form_imaginary_residue(&v).unwrap() {
                assert!(residue.abs() < 1e-14 * u.norm_sq().max(1.0));
            }
        }
    }

    /// Replays the solve that fixed the gamma-form list: over the 20 signed
    /// candidates `{+-gamma^a, +-i gamma^a}` restricted to Hermitian ones,
    /// each target component of the R8 -> R5 map matches exactly one.
    #[test]
    fn gamma_list_is_the_unique_hermitian_resolution() {
        let sigma = |k: usize| PAULI[k];
        let gamma_i = |k: usize| -> Vec<Vec<Complex64>> {
            let s = sigma(k);
            let mut m = vec![vec![ZERO; 4]; 4];
            for r in 0..2 {
                for c in 0..2 {
                    m[r][c + 2] = s[r][c];
                    m[r + 2][c] = -s[r][c];
                }
            }
            m
        };
        let mut g5 = vec![vec![ZERO; 4]; 4];
        let mut g0 = vec![vec![ZERO; 4]; 4];
        for r in 0..2 {
            g5[r][r + 2] = ONE;
            g5[r + 2][r] = ONE;
            g0[r][r] = ONE;
            g0[r + 2][r + 2] = -ONE;
        }
        let mut candidates: Vec<(String, Vec<Vec<Complex64>>)> = Vec::new();
        let named: Vec<(&str, Vec<Vec<Complex64>>)> = vec![
            ("g0", g0),
            ("g1", gamma_i(0)),
            ("g2", gamma_i(1)),
            ("g3", gamma_i(2)),
            ("g5", g5),
        ];
        for (name, g) in &named {
            for (s, sname) in [(ONE, "+"), (-ONE, "-")] {
                for (f, fname) in [(ONE, ""), (I, "i")] {
                    let m: Vec<Vec<Complex64>> = g
                        .iter()
                        .map(|row| row.iter().map(|e| s * f * e).collect())
                        .collect();
                    let hermitian =
                        (0..4).all(|j| (0..4).all(|k| (m[j][k] - m[k][j].conj()).norm() < 1e-15));
                    if hermitian {
                        candidates.push((format!("{sname}{fname}{name}"), m));
                    }
                }
            }
        }
        assert_eq!(candidates.len(), 10);

        let mut rng = TestRng::new(173);
        let inputs: Vec<VecN> = (0..40).map(|_| rng.vec(8)).collect();
        let targets: Vec<VecN> = inputs
            .iter()
            .map(|u| hurwitz_r8_to_r5(u).unwrap())
            .collect();
        let mut resolved = Vec::new();
        for comp in 0..5 {
            let matches: Vec<&str> = candidates
                .iter()
                .filter(|(_, m)| {
                    inputs.iter().zip(&targets).all(|(u, t)| {
                        let v = ComplexSpinor::from_real(u).unwrap();
                        (quadratic_form(v.components(), m).re - t[comp]).abs()
                            <= 1e-10 * u.norm_sq().max(1.0)
                    })
                })
                .map(|(n, _)| n.as_str())
                .collect();
            assert_eq!(matches.len(), 1, "component {comp} resolution not unique");
            resolved.push(matches[0].to_string());
        }
        assert_eq!(resolved, vec!["+g5", "-ig3", "+ig2", "-ig1", "+g0"]);
    }

    #[test]
    fn spinor_dimension_errors() {
        assert!(ComplexSpinor::from_real(&VecN::zeros(6)).is_err());
        let v2 = ComplexSpinor::from_real(&VecN::zeros(4)).unwrap();
        let v4 = ComplexSpinor::from_real(&VecN::zeros(8)).unwrap();
        assert!(pauli_form(&v4).is_err());
        assert!(dirac_form(&v2).is_err());
    }
}
