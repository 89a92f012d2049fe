//! Composition-algebra arithmetic and the geometry it generates.
//!
//! This crate implements:
//!
//! - [`algebra`]: Cayley-Dickson hypercomplex numbers up to level 5 (reals,
//!   complexes, quaternions, octonions, sedenions, and one doubling beyond),
//!   with exact integer basis multiplication tables;
//! - [`cross`]: the 3- and 7-dimensional vector cross products through their
//!   antisymmetric matrix representations, the generalized point-mass inertia
//!   tensor, and the dimension count that singles out 1, 3 and 7;
//! - [`hurwitz`]: the Hurwitz matrices of sizes 2, 4, 8, 16 and the quadratic
//!   norm-squaring transformations R2->R2, R4->R3, R8->R5, R16->R9, plus a
//!   restricted exhaustive search for the size obstruction;
//! - [`rotation`]: closed-form rotation operators about an axis in 3 and 7
//!   dimensions;
//! - [`spinor`]: Pauli and Dirac quadratic-form representations of the
//!   norm-squaring transforms.
//!
//! Conventions fixed throughout and validated by the test suite:
//!
//! - Cayley-Dickson doubling rule `(a, b)(c, d) = (ac - conj(d) b, da + b conj(c))`,
//!   under which `e1 e2 = e3` and the imaginary units anticommute;
//! - cross-product operand order `cross(omega, r) = V_n(r) omega = omega x r`.

pub mod algebra;
pub mod cross;
pub mod error;
pub mod hurwitz;
pub mod rotation;
pub mod spinor;
pub mod vec;

pub use algebra::{BasisProduct, BasisTable, Hypercomplex, MAX_LEVEL};
pub use cross::{
    admissible_dimensions, cross, cross_from_algebra, cross_matrix, inertia_tensor, kinetic_energy,
    CrossMatrix, InertiaMatrix,
};
pub use error::{Error, Result};
pub use hurwitz::{
    bordered_from_cross, hurwitz_matrix, hurwitz_r8_to_r5, hurwitz_recursive, hurwitz_transform,
    ks_transform, levi_civita, obstruction_search, HurwitzMatrix, TransformKind, TransformResult,
};
pub use rotation::{rotate, rotation_matrix, RotationMatrix};
pub use spinor::{dirac_form, pauli_form, ComplexSpinor};
pub use vec::{Matrix, VecN};

#[cfg(test)]
pub(crate) mod testutil {
    use crate::algebra::Hypercomplex;
    use crate::vec::VecN;

    /// Tiny deterministic generator (xorshift64*) for unit-test inputs,
    /// uniform-ish on [-1, 1).
    pub(crate) struct TestRng {
        state: u64,
    }

    impl TestRng {
        pub(crate) fn new(seed: u64) -> Self {
            Self {
                state: seed.wrapping_mul(0x9e37_79b9_7f4a_7c15).max(1),
            }
        }

        pub(crate) fn next_f64(&mut self) -> f64 {
            self.state ^= self.state >> 12;
            self.state ^= self.state << 25;
            self.state ^= self.state >> 27;
            let x = self.state.wrapping_mul(0x2545_f491_4f6c_dd1d);
            (x >> 11) as f64 / (1u64 << 52) as f64 - 1.0
        }

        pub(crate) fn element(&mut self, level: usize) -> Hypercomplex {
            let dim = 1usize << level;
            Hypercomplex::new(level, (0..dim).map(|_| self.next_f64()).collect()).unwrap()
        }

        pub(crate) fn vec(&mut self, n: usize) -> VecN {
            VecN::new((0..n).map(|_| self.next_f64()).collect())
        }

        /// Vector of dyadic rationals k/16 with small k: products and sums of
        /// these are exactly representable, so identities that hold by sign
        /// cancellation can be asserted with zero tolerance.
        pub(crate) fn dyadic_vec(&mut self, n: usize) -> VecN {
            VecN::new(
                (0..n)
                    .map(|_| (self.next_f64() * 16.0).round() / 16.0)
                    .collect(),
            )
        }
    }
}
