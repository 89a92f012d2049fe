//! Runtime verification suites.
//!
//! Each suite samples random inputs, evaluates one family of identities, and
//! reports the worst residual against a tolerance. Sampling uses the ChaCha8
//! generator; every suite derives its own stream from the user seed and the
//! suite name, so a suite behaves identically whether run alone or as part
//! of the full set, and repeated runs are byte-identical.

use hypercross::{
    admissible_dimensions, cross, cross_matrix, dirac_form, hurwitz, hurwitz_matrix,
    hurwitz_r8_to_r5, hurwitz_transform, inertia_tensor, ks_transform, pauli_form, rotation_matrix,
    BasisTable, ComplexSpinor, Hypercomplex, Matrix, TransformKind, VecN,
};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// Outcome of one verification suite.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub identity_name: String,
    pub samples: usize,
    pub max_residual: f64,
    pub tolerance: f64,
    pub passed: bool,
}

impl VerifyReport {
    fn new(name: &str, samples: usize, max_residual: f64, tolerance: f64) -> Self {
        Self {
            identity_name: name.to_string(),
            samples,
            max_residual,
            tolerance,
            passed: max_residual <= tolerance,
        }
    }
}

struct Suite {
    name: &'static str,
    tolerance: f64,
    run: fn(&mut ChaCha8Rng, usize) -> (usize, f64),
}

/// Suites in output order (sorted by name).
fn suites() -> Vec<Suite> {
    vec![
        Suite {
            name: "algebra_alternativity",
            tolerance: 1e-12,
            run: run_alternativity,
        },
        Suite {
            name: "algebra_anticommutation",
            tolerance: 0.0,
            run: run_anticommutation,
        },
        Suite {
            name: "algebra_basis_squares",
            tolerance: 0.0,
            run: run_basis_squares,
        },
        Suite {
            name: "algebra_norm_composition",
            tolerance: 1e-12,
            run: run_norm_composition,
        },
        Suite {
            name: "cross_antisymmetry",
            tolerance: 0.0,
            run: run_cross_antisymmetry,
        },
        Suite {
            name: "cross_lagrange",
            tolerance: 1e-12,
            run: run_cross_lagrange,
        },
        Suite {
            name: "cross_orthogonality",
            tolerance: 1e-12,
            run: run_cross_orthogonality,
        },
        Suite {
            name: "dims_count",
            tolerance: 0.0,
            run: run_dims,
        },
        Suite {
            name: "eq15",
            tolerance: 1e-10,
            run: run_cubic_identity,
        },
        Suite {
            name: "eq16",
            tolerance: 1e-10,
            run: run_rotation_exponential,
        },
        Suite {
            name: "hurwitz_orthogonality",
            tolerance: 1e-12,
            run: run_hurwitz_orthogonality,
        },
        Suite {
            name: "inertia_identity",
            tolerance: 1e-12,
            run: run_inertia_identity,
        },
        Suite {
            name: "spinor_dirac",
            tolerance: 1e-12,
            run: run_spinor_dirac,
        },
        Suite {
            name: "spinor_pauli",
            tolerance: 1e-12,
            run: run_spinor_pauli,
        },
        Suite {
            name: "transform_norm",
            tolerance: 1e-12,
            run: run_transform_norm,
        },
    ]
}

pub fn suite_names() -> Vec<&'static str> {
    suites().iter().map(|s| s.name).collect()
}

/// Runs the selected suites. `samples` is the per-variant sample count;
/// `tolerance` overrides every suite's default when given.
pub fn run_suites(
    filter: Option<&str>,
    samples: usize,
    tolerance: Option<f64>,
    seed: u64,
) -> Result<Vec<VerifyReport>, String> {
    let all = suites();
    if let Some(name) = filter {
        if !all.iter().any(|s| s.name == name) {
            return Err(format!(
                "unknown suite '{name}'; available: {}",
                suite_names().join(", ")
            ));
        }
    }
    let mut reports = Vec::new();
    for suite in &all {
        if let Some(name) = filter {
            if suite.name != name {
                continue;
            }
        }
        let mut rng = suite_rng(seed, suite.name);
        let (count, residual) = (suite.run)(&mut rng, samples);
        let tol = tolerance.unwrap_or(suite.tolerance);
        reports.push(VerifyReport::new(suite.name, count, residual, tol));
    }
    Ok(reports)
}

/// Per-suite stream: the user seed folded with an FNV-1a hash of the suite
/// name, so streams are independent of suite ordering.
fn suite_rng(seed: u64, name: &str) -> ChaCha8Rng {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in name.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x100_0000_01b3);
    }
    ChaCha8Rng::seed_from_u64(seed ^ h)
}

fn sample_coord(rng: &mut ChaCha8Rng) -> f64 {
    rng.random_range(-1.0..=1.0)
}

fn sample_vec(rng: &mut ChaCha8Rng, n: usize) -> VecN {
    VecN::new((0..n).map(|_| sample_coord(rng)).collect())
}

fn sample_element(rng: &mut ChaCha8Rng, level: usize) -> Hypercomplex {
    let dim = 1usize << level;
    Hypercomplex::new(level, (0..dim).map(|_| sample_coord(rng)).collect())
        .expect("level within range")
}

/// Coordinates snapped to multiples of 2^-13: uniform at 13-bit resolution,
/// with exactly representable products, so sign-cancellation identities hold
/// with zero tolerance.
fn sample_dyadic_vec(rng: &mut ChaCha8Rng, n: usize) -> VecN {
    let scale = f64::from(1 << 13);
    VecN::new(
        (0..n)
            .map(|_| (sample_coord(rng) * scale).round() / scale)
            .collect(),
    )
}

fn run_alternativity(rng: &mut ChaCha8Rng, samples: usize) -> (usize, f64) {
    let mut worst: f64 = 0.0;
    for _ in 0..samples {
        let a = sample_element(rng, 3);
        let b = sample_element(rng, 3);
        let scale = (a.norm_sq() * b.norm_sq().sqrt()).max(1e-12);
        let ab = a.cd_mul(&b).unwrap();
        let aa = a.cd_mul(&a).unwrap();
        let left = a.cd_mul(&ab).unwrap();
        let left_assoc = aa.cd_mul(&b).unwrap();
        let ba = b.cd_mul(&a).unwrap();
        let right = ba.cd_mul(&a).unwrap();
        let right_assoc = b.cd_mul(&aa).unwrap();
        for (x, y) in left
            .coeffs()
            .iter()
            .zip(left_assoc.coeffs())
            .chain(right.coeffs().iter().zip(right_assoc.coeffs()))
        {
            worst = worst.max((x - y).abs() / scale);
        }
    }
    (samples, worst)
}

fn run_anticommutation(_rng: &mut ChaCha8Rng, _samples: usize) -> (usize, f64) {
    let table = BasisTable::new(3).expect("level 3 supported");
    let mut violations = 0usize;
    let mut checks = 0usize;
    for i in 1..8 {
        for j in 1..8 {
            checks += 1;
            if i == j {
                let p = table.get(i, i);
                if p.sign != -1 || p.index != 0 {
                    violations += 1;
                }
            } else {
                let p = table.get(i, j);
                let q = table.get(j, i);
                if p.index != q.index || p.sign != -q.sign {
                    violations += 1;
                }
            }
        }
    }
    (checks, violations as f64)
}

fn run_basis_squares(_rng: &mut ChaCha8Rng, _samples: usize) -> (usize, f64) {
    let mut violations = 0usize;
    let mut checks = 0usize;
    for level in 1..=hypercross::MAX_LEVEL {
        let table = BasisTable::new(level).expect("level supported");
        for i in 1..table.dim() {
            checks += 1;
            let p = table.get(i, i);
            if p.sign != -1 || p.index != 0 {
                violations += 1;
            }
        }
    }
    (checks, violations as f64)
}

fn run_norm_composition(rng: &mut ChaCha8Rng, samples: usize) -> (usize, f64) {
    let mut worst: f64 = 0.0;
    let mut count = 0usize;
    for level in 1..=3 {
        for _ in 0..samples {
            let a = sample_element(rng, level);
            let b = sample_element(rng, level);
            let lhs = a.cd_mul(&b).unwrap().norm_sq();
            let rhs = a.norm_sq() * b.norm_sq();
            worst = worst.max((lhs - rhs).abs() / rhs.max(1e-12));
            count += 1;
        }
    }
    (count, worst)
}

fn run_cross_antisymmetry(rng: &mut ChaCha8Rng, samples: usize) -> (usize, f64) {
    let mut worst: f64 = 0.0;
    let mut count = 0usize;
    for n in [3usize, 7] {
        for _ in 0..samples {
            let a = sample_dyadic_vec(rng, n);
            let b = sample_dyadic_vec(rng, n);
            let sum = cross(&a, &b).unwrap().add(&cross(&b, &a).unwrap());
            worst = worst.max(sum.max_abs());
            count += 1;
        }
    }
    (count, worst)
}

fn run_cross_lagrange(rng: &mut ChaCha8Rng, samples: usize) -> (usize, f64) {
    let mut worst: f64 = 0.0;
    let mut count = 0usize;
    for n in [3usize, 7] {
        for _ in 0..samples {
            let a = sample_vec(rng, n);
            let b = sample_vec(rng, n);
            let lhs = cross(&a, &b).unwrap().norm_sq();
            let rhs = a.norm_sq() * b.norm_sq() - a.dot(&b).powi(2);
            let scale = (a.norm_sq() * b.norm_sq()).max(1e-12);
            worst = worst.max((lhs - rhs).abs() / scale);
            count += 1;
        }
    }
    (count, worst)
}

fn run_cross_orthogonality(rng: &mut ChaCha8Rng, samples: usize) -> (usize, f64) {
    let mut worst: f64 = 0.0;
    let mut count = 0usize;
    for n in [3usize, 7] {
        for _ in 0..samples {
            let a = sample_vec(rng, n);
            let b = sample_vec(rng, n);
            let c = cross(&a, &b).unwrap();
            let scale = (a.norm_sq() * b.norm_sq()).max(1e-12);
            worst = worst.max(c.dot(&a).abs() / scale);
            worst = worst.max(c.dot(&b).abs() / scale);
            count += 1;
        }
    }
    (count, worst)
}

fn run_dims(_rng: &mut ChaCha8Rng, _samples: usize) -> (usize, f64) {
    let expected: Vec<usize> = vec![1, 3, 7];
    let violations = if admissible_dimensions(100) == expected {
        0.0
    } else {
        1.0
    };
    (100, violations)
}

fn run_cubic_identity(rng: &mut ChaCha8Rng, samples: usize) -> (usize, f64) {
    let mut worst: f64 = 0.0;
    let mut count = 0usize;
    for n in [3usize, 7] {
        for _ in 0..samples {
            let r = sample_vec(rng, n);
            if r.norm() < 1e-6 {
                continue;
            }
            let unit = r.scale(1.0 / r.norm());
            let v = cross_matrix(&unit).unwrap().into_matrix();
            let v3 = v.mul(&v).mul(&v);
            worst = worst.max(v3.add(&v.scale(unit.norm_sq())).max_abs());
            count += 1;
        }
    }
    (count, worst)
}

/// Truncated Taylor series of exp(theta * V) summed matrix-wise; independent
/// of the closed-form path under test. 40 terms keep the truncation tail at
/// machine level over |theta| <= 2 pi.
fn series_exponential(v: &Matrix, theta: f64, terms: usize) -> Matrix {
    let n = v.size();
    let mut sum = Matrix::identity(n);
    let mut power = Matrix::identity(n);
    let mut factorial = 1.0;
    for k in 1..=terms {
        power = power.mul(v);
        factorial *= k as f64;
        sum = sum.add(&power.scale(theta.powi(k as i32) / factorial));
    }
    sum
}

fn run_rotation_exponential(rng: &mut ChaCha8Rng, samples: usize) -> (usize, f64) {
    let mut worst: f64 = 0.0;
    let mut count = 0usize;
    for n in [3usize, 7] {
        for _ in 0..samples {
            let axis = sample_vec(rng, n);
            if axis.norm() < 1e-6 {
                continue;
            }
            let theta = 2.0 * std::f64::consts::PI * sample_coord(rng);
            let closed = rotation_matrix(&axis, theta).unwrap().into_matrix();
            let unit = axis.scale(1.0 / axis.norm());
            let v = cross_matrix(&unit).unwrap().into_matrix();
            let series = series_exponential(&v, theta, 40);
            worst = worst.max(closed.max_abs_diff(&series));
            count += 1;
        }
    }
    (count, worst)
}

fn run_hurwitz_orthogonality(rng: &mut ChaCha8Rng, samples: usize) -> (usize, f64) {
    let mut worst: f64 = 0.0;
    let mut count = 0usize;
    for &m in hurwitz::HURWITZ_SIZES {
        let gdim = hurwitz::generator_dim(m).expect("supported size");
        for _ in 0..samples {
            let g = sample_vec(rng, gdim);
            let u = hurwitz::embed_generator(m, &g).expect("supported size");
            let h = hurwitz_matrix(&u).unwrap().into_matrix();
            let nn = u.norm_sq();
            let target = Matrix::identity(m).scale(nn);
            let orth = h.transpose().mul(&h).max_abs_diff(&target);
            let square = h.mul(&h).add(&target).max_abs();
            worst = worst.max(orth.max(square) / nn.max(1e-12));
            count += 1;
        }
    }
    (count, worst)
}

fn run_inertia_identity(rng: &mut ChaCha8Rng, samples: usize) -> (usize, f64) {
    let mut worst: f64 = 0.0;
    let mut count = 0usize;
    for n in [3usize, 7] {
        for _ in 0..samples {
            let r = sample_vec(rng, n);
            let v = cross_matrix(&r).unwrap().into_matrix();
            let m = inertia_tensor(&r).into_matrix();
            worst = worst.max(v.transpose().mul(&v).max_abs_diff(&m) / r.norm_sq().max(1e-12));
            count += 1;
        }
    }
    (count, worst)
}

fn run_spinor_pauli(rng: &mut ChaCha8Rng, samples: usize) -> (usize, f64) {
    let mut worst: f64 = 0.0;
    for _ in 0..samples {
        let u = sample_vec(rng, 4);
        let v = ComplexSpinor::from_real(&u).expect("dimension 4");
        let z = pauli_form(&v).unwrap();
        let t = ks_transform(&u).unwrap();
        worst = worst.max(z.sub(&t).max_abs() / u.norm_sq().max(1e-12));
    }
    (samples, worst)
}

fn run_spinor_dirac(rng: &mut ChaCha8Rng, samples: usize) -> (usize, f64) {
    let mut worst: f64 = 0.0;
    for _ in 0..samples {
        let u = sample_vec(rng, 8);
        let v = ComplexSpinor::from_real(&u).expect("dimension 8");
        let z = dirac_form(&v).unwrap();
        let t = hurwitz_r8_to_r5(&u).unwrap();
        worst = worst.max(z.sub(&t).max_abs() / u.norm_sq().max(1e-12));
    }
    (samples, worst)
}

fn run_transform_norm(rng: &mut ChaCha8Rng, samples: usize) -> (usize, f64) {
    let mut worst: f64 = 0.0;
    let mut count = 0usize;
    for kind in [
        TransformKind::LeviCivita,
        TransformKind::KustaanheimoStiefel,
        TransformKind::R8ToR5,
        TransformKind::R16ToR9,
    ] {
        for _ in 0..samples {
            let u = sample_vec(rng, kind.input_dim());
            let z = hurwitz_transform(kind, &u).unwrap().z;
            let rhs = u.norm_sq();
            worst = worst.max((z.norm() - rhs).abs() / rhs.max(1e-12));
            count += 1;
        }
    }
    (count, worst)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass_at_default_tolerances() {
        let reports = run_suites(None, 200, None, 42).unwrap();
        assert_eq!(reports.len(), suite_names().len());
        for r in &reports {
            assert!(r.passed, "{}: residual {}", r.identity_name, r.max_residual);
            assert_eq!(r.passed, r.max_residual <= r.tolerance);
        }
    }

    #[test]
    fn suite_names_are_sorted() {
        let names = suite_names();
        let mut sorted = names.clone();
        sorted.sort_unstable();
        assert_eq!(names, sorted);
    }

    #[test]
    fn fixed_seed_is_reproducible() {
        let a = run_suites(None, 50, None, 7).unwrap();
        let b = run_suites(None, 50, None, 7).unwrap();
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.identity_name, y.identity_name);
            assert_eq!(x.max_residual, y.max_residual);
        }
    }

    #[test]
    fn single_suite_stream_matches_full_run() {
        let full = run_suites(None, 50, None, 9).unwrap();
        let single = run_suites(Some("eq15"), 50, None, 9).unwrap();
        let from_full = full.iter().find(|r| r.identity_name == "eq15").unwrap();
        assert_eq!(single[0].max_residual, from_full.max_residual);
    }

    #[test]
    fn unknown_suite_is_an_error() {
        assert!(run_suites(Some("nope"), 10, None, 0).is_err());
    }

    #[test]
    fn tight_tolerance_fails() {
        let reports = run_suites(Some("eq15"), 50, Some(1e-300), 0).unwrap();
        assert!(!reports[0].passed);
    }
}
