//! Hurwitz matrices, the quadratic norm-squaring transformations they
//! package (Levi-Civita, Kustaanheimo-Stiefel, R8 -> R5, R16 -> R9), and a
//! restricted exhaustive search confirming that only sizes 1, 2, 4, 8 admit
//! such matrices with single-coordinate entries.
//!
//! # Arrangements and generating subspaces
//!
//! [`hurwitz_matrix`] returns, for each size m, a fixed m-by-m arrangement
//! `H_m(u)` linear in `u` with one distinguished "real" slot on the diagonal:
//!
//! | m  | arrangement                                   | real slot |
//! |----|-----------------------------------------------|-----------|
//! | 2  | `((u1, u2), (-u2, u1))`                        | u1        |
//! | 4  | `u4 I + [[V3(u1,u2,u3), r], [-r^T, 0]]`        | u4        |
//! | 8  | 8x8 doubling arrangement (see `H8_TEMPLATE`)   | u5        |
//! | 16 | Cayley-Dickson doubling applied once more      | u9        |
//!
//! For m in {2, 4, 8} the orthogonality law `H^T H = |u|^2 I` holds for
//! every u in R^m. Zeroing the real slot makes H exactly antisymmetric with
//! `H^2 = -|u|^2 I`; that hyperplane is the *generating subspace* of the
//! classical antisymmetric Hurwitz family (dimension m - 1).
//!
//! At m = 16 the doubling construction still produces a matrix, and the
//! associated R16 -> R9 transform still squares norms, but `H^T H = |u|^2 I`
//! cannot extend to all of R^16: an antisymmetric orthogonal family on R^16
//! has at most 8 independent parameters (the Hurwitz-Radon bound), and the
//! 16-coefficient algebra behind the doubling has zero divisors. The failure
//! is witnessed exactly by `u = e2 + e11`. The matrix is a genuine Hurwitz
//! matrix only on the 8-dimensional subspace where the high half of `u`
//! vanishes; see [`embed_generator`].

use crate::algebra::{BasisTable, Hypercomplex};
use crate::cross::{cross_matrix, fill_template, TemplateEntry};
use crate::error::{Error, Result};
use crate::vec::{Matrix, VecN};
use std::sync::OnceLock;

pub const HURWITZ_SIZES: &[usize] = &[2, 4, 8, 16];

/// Index (0-based) of the diagonal "real" slot of each arrangement.
pub fn real_slot(m: usize) -> Result<usize> {
    match m {
        2 => Ok(0),
        4 => Ok(3),
        8 => Ok(4),
        16 => Ok(8),
        _ => Err(Error::UnsupportedDimension {
            got: m,
            supported: HURWITZ_SIZES,
        }),
    }
}

/// Dimension of the generating subspace on which `H_m` is antisymmetric and
/// orthogonal at once: m - 1 for m in {2, 4, 8}, and 8 for m = 16 (the
/// Hurwitz-Radon maximum).
pub fn generator_dim(m: usize) -> Result<usize> {
    match m {
        2 => Ok(1),
        4 => Ok(3),
        8 => Ok(7),
        16 => Ok(8),
        _ => Err(Error::UnsupportedDimension {
            got: m,
            supported: HURWITZ_SIZES,
        }),
    }
}

/// Embeds a generating vector into R^m so that `hurwitz_matrix` of the result
/// is exactly antisymmetric with `H^T H = |u|^2 I` and `H^2 = -|u|^2 I`.
///
/// For m in {2, 4, 8} this places the coordinates into the imaginary slots
/// (real slot zero); for m = 16 it fills the low half and zeroes the high
/// half.
pub fn embed_generator(m: usize, g: &VecN) -> Result<VecN> {
    let expected = generator_dim(m)?;
    if g.dim() != expected {
        return Err(Error::DimensionMismatch {
            left: g.dim(),
            right: expected,
        });
    }
    let mut u = vec![0.0; m];
    if m == 16 {
        u[..8].copy_from_slice(g.coords());
    } else {
        let slot = real_slot(m)?;
        let mut t = 0;
        for (i, entry) in u.iter_mut().enumerate() {
            if i != slot {
                *entry = g[t];
                t += 1;
            }
        }
    }
    Ok(VecN::new(u))
}

/// H_2 arrangement: `((u1, u2), (-u2, u1))`.
pub(crate) const H2_TEMPLATE: [[TemplateEntry; 2]; 2] = [[(1, 0), (1, 1)], [(-1, 1), (1, 0)]];

/// H_8 arrangement produced by the doubling construction. Exact antisymmetry
/// of the off-diagonal part together with the polynomial orthogonality law
/// pins every entry uniquely; the tests replay that determination for the
/// row-5/column-3 entry.
#[rustfmt::skip]
pub(crate) const H8_TEMPLATE: [[TemplateEntry; 8]; 8] = [
    [(1, 4),  (1, 5),  (1, 6),  (1, 7),  (1, 0),  (1, 1),  (1, 2),  (1, 3)],
    [(-1, 5), (1, 4),  (1, 7),  (-1, 6), (1, 1),  (-1, 0), (-1, 3), (1, 2)],
    [(-1, 6), (-1, 7), (1, 4),  (1, 5),  (1, 2),  (1, 3),  (-1, 0), (-1, 1)],
    [(-1, 7), (1, 6),  (-1, 5), (1, 4),  (1, 3),  (-1, 2), (1, 1),  (-1, 0)],
    [(-1, 0), (-1, 1), (-1, 2), (-1, 3), (1, 4),  (1, 5),  (1, 6),  (1, 7)],
    [(-1, 1), (1, 0),  (-1, 3), (1, 2),  (-1, 5), (1, 4),  (-1, 7), (1, 6)],
    [(-1, 2), (1, 3),  (1, 0),  (-1, 1), (-1, 6), (1, 7),  (1, 4),  (-1, 5)],
    [(-1, 3), (-1, 2), (1, 1),  (1, 0),  (-1, 7), (-1, 6), (1, 5),  (1, 4)],
];

/// An m-by-m matrix linear in a generating vector, with `H^T H = |u|^2 I` on
/// its valid domain (see the module docs for the m = 16 caveat).
#[derive(Debug, Clone, PartialEq)]
pub struct HurwitzMatrix {
    matrix: Matrix,
}

impl HurwitzMatrix {
    pub fn size(&self) -> usize {
        self.matrix.size()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> Matrix {
        self.matrix
    }
}

fn level4_table() -> &'static BasisTable {
    static TABLE: OnceLock<BasisTable> = OnceLock::new();
    TABLE.get_or_init(|| BasisTable::new(4).expect("level 4 is supported"))
}

/// Left-multiplication matrix of a hypercomplex element, assembled from the
/// exact basis table: column j is `x * e_j`.
fn left_mult_matrix(x: &Hypercomplex, table: &BasisTable) -> Matrix {
    let dim = x.dim();
    let mut m = Matrix::zeros(dim);
    for j in 0..dim {
        for (k, &coeff) in x.coeffs().iter().enumerate() {
            if coeff == 0.0 {
                continue;
            }
            let p = table.get(k, j);
            m.set(p.index, j, m.get(p.index, j) + f64::from(p.sign) * coeff);
        }
    }
    m
}

/// The doubling step: for `u = (p, q)` the matrix is left multiplication by
/// `(conj(q), -p)` in the algebra one level up. Applied to octonion halves
/// this yields the 16-by-16 arrangement; applied to quaternion halves it
/// reproduces `H8_TEMPLATE` exactly (a test pins this).
fn doubling_matrix(u: &VecN, level: usize, table: &BasisTable) -> Matrix {
    let dim = 1usize << level;
    debug_assert_eq!(u.dim(), dim);
    let h = dim / 2;
    let mut phi = vec![0.0; dim];
    // low half: conj of the high half of u
    phi[0] = u[h];
    for i in 1..h {
        phi[i] = -u[h + i];
    }
    // high half: negated low half of u
    for j in 0..h {
        phi[h + j] = -u[j];
    }
    let x = Hypercomplex::new(level, phi).expect("dimension is a power of two");
    left_mult_matrix(&x, table)
}

/// Builds `H_m(u)` for m = u.dim() in {2, 4, 8, 16}.
pub fn hurwitz_matrix(u: &VecN) -> Result<HurwitzMatrix> {
    let m = u.dim();
    let matrix = match m {
        2 => fill_template(
            &H2_TEMPLATE.iter().map(|r| r.as_slice()).collect::<Vec<_>>(),
            u.coords(),
        ),
        4 => {
            // bordered V3 plus the real slot on the diagonal
            let r = VecN::from(&u.coords()[..3]);
            let mut h = bordered_matrix(&r)?;
            for i in 0..4 {
                h.set(i, i, u[3]);
            }
            h
        }
        8 => fill_template(
            &H8_TEMPLATE.iter().map(|r| r.as_slice()).collect::<Vec<_>>(),
            u.coords(),
        ),
        16 => doubling_matrix(u, 4, level4_table()),
        _ => {
            return Err(Error::UnsupportedDimension {
                got: m,
                supported: HURWITZ_SIZES,
            })
        }
    };
    Ok(HurwitzMatrix { matrix })
}

fn bordered_matrix(r: &VecN) -> Result<Matrix> {
    let n = r.dim();
    let v = cross_matrix(r)?;
    let mut h = Matrix::zeros(n + 1);
    for i in 0..n {
        for j in 0..n {
            h.set(i, j, v.matrix().get(i, j));
        }
        h.set(i, n, r[i]);
        h.set(n, i, -r[i]);
    }
    Ok(h)
}

/// The (n+1)-by-(n+1) block matrix `[[V_n(r), r], [-r^T, 0]]` for n in
/// {3, 7}: the classical antisymmetric Hurwitz matrix generated by r.
pub fn bordered_from_cross(r: &VecN) -> Result<HurwitzMatrix> {
    Ok(HurwitzMatrix {
        matrix: bordered_matrix(r)?,
    })
}

/// The conformal squaring map of the plane:
/// `z1 = u1^2 - u2^2, z2 = 2 u1 u2`.
pub fn levi_civita(u: &VecN) -> Result<VecN> {
    u.require_dim(2)?;
    Ok(VecN::new(vec![
        u[0] * u[0] - u[1] * u[1],
        2.0 * u[0] * u[1],
    ]))
}

/// The R4 -> R3 norm-squaring map:
/// `(z1, z2) = 2 H_2(u1, u2) (u3, u4)` and `z3 = (u1^2 + u2^2) - (u3^2 + u4^2)`.
pub fn ks_transform(u: &VecN) -> Result<VecN> {
    u.require_dim(4)?;
    Ok(VecN::new(vec![
        2.0 * (u[0] * u[2] + u[1] * u[3]),
        2.0 * (u[0] * u[3] - u[1] * u[2]),
        (u[0] * u[0] + u[1] * u[1]) - (u[2] * u[2] + u[3] * u[3]),
    ]))
}

/// The R8 -> R5 norm-squaring map read off the rows of the 8-by-8
/// arrangement: `H_8(u) u = (z1, -z2, -z3, -z4, -z5, 0, 0, 0)^T`, with the
/// signs folded into the returned z. Rows 6-8 are structural zeros; they are
/// verified by tests rather than assumed.
pub fn hurwitz_r8_to_r5(u: &VecN) -> Result<VecN> {
    u.require_dim(8)?;
    let h = hurwitz_matrix(u)?;
    let w = h.matrix().apply(u);
    Ok(VecN::new(vec![w[0], -w[1], -w[2], -w[3], -w[4]]))
}

/// One doubling step of the norm-squaring recurrence: for `u = (p, q)` of
/// dimension 2m with m in {1, 2, 4, 8},
/// `z[0..m] = 2 H_m(p) q` and `z[m] = |p|^2 - |q|^2`,
/// giving a map R^(2m) -> R^(m+1) with `|z| = |u|^2`.
pub fn hurwitz_recursive(u: &VecN) -> Result<VecN> {
    let dim = u.dim();
    if !matches!(dim, 2 | 4 | 8 | 16) {
        return Err(Error::UnsupportedDimension {
            got: dim,
            supported: &[2, 4, 8, 16],
        });
    }
    let m = dim / 2;
    let p = VecN::from(&u.coords()[..m]);
    let q = VecN::from(&u.coords()[m..]);
    let mut z = if m == 1 {
        vec![2.0 * p[0] * q[0]]
    } else {
        let h = hurwitz_matrix(&p)?;
        h.matrix().apply(&q).scale(2.0).coords().to_vec()
    };
    z.push(p.norm_sq() - q.norm_sq());
    Ok(VecN::new(z))
}

/// The four named norm-squaring transformations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransformKind {
    /// R2 -> R2 (Levi-Civita)
    LeviCivita,
    /// R4 -> R3 (Kustaanheimo-Stiefel)
    KustaanheimoStiefel,
    /// R8 -> R5
    R8ToR5,
    /// R16 -> R9 (doubling recurrence)
    R16ToR9,
}

impl TransformKind {
    pub fn input_dim(self) -> usize {
        match self {
            TransformKind::LeviCivita => 2,
            TransformKind::KustaanheimoStiefel => 4,
            TransformKind::R8ToR5 => 8,
            TransformKind::R16ToR9 => 16,
        }
    }

    /// Count of structurally zero rows in the square arrangement the
    /// transform is read from.
    pub fn structural_zeros(self) -> usize {
        match self {
            TransformKind::LeviCivita => 0,
            TransformKind::KustaanheimoStiefel => 1,
            TransformKind::R8ToR5 => 3,
            TransformKind::R16ToR9 => 7,
        }
    }
}

/// Output of a Hurwitz transformation: the image vector plus the count of
/// structurally zero rows in the underlying square system.
#[derive(Debug, Clone, PartialEq)]
pub struct TransformResult {
    pub z: VecN,
    pub structural_zeros: usize,
}

/// Applies the named transformation, checking the input dimension.
pub fn hurwitz_transform(kind: TransformKind, u: &VecN) -> Result<TransformResult> {
    u.require_dim(kind.input_dim())?;
    let z = match kind {
        TransformKind::LeviCivita => levi_civita(u)?,
        TransformKind::KustaanheimoStiefel => ks_transform(u)?,
        TransformKind::R8ToR5 => hurwitz_r8_to_r5(u)?,
        TransformKind::R16ToR9 => hurwitz_recursive(u)?,
    };
    Ok(TransformResult {
        z,
        structural_zeros: kind.structural_zeros(),
    })
}

/// Exhaustive search over n-by-n matrices whose entries are drawn from
/// `{0, +-x_1, ..., +-x_n}`, testing `H^T H = |x|^2 I` as a polynomial
/// identity in exact integer arithmetic. Returns true iff a solution exists.
///
/// This is a restricted verification of the size obstruction, not a proof of
/// the general theorem: entries are single signed coordinates rather than
/// arbitrary linear combinations. Within that ansatz the search is
/// exhaustive. Columns whose squared-norm polynomial differs from
/// `x_1^2 + ... + x_n^2` can never appear in a solution (the diagonal of
/// `H^T H` forces each coordinate to occur exactly once per column), so the
/// enumeration first filters the `(2n+1)^n` candidate columns down to signed
/// permutations and then backtracks over pairwise-orthogonal choices. The
/// filter is lossless, so a `false` answer is a genuine exhaustion.
pub fn obstruction_search(n: usize) -> Result<bool> {
    if !(1..=4).contains(&n) {
        return Err(Error::SearchSizeOutOfRange {
            got: n,
            min: 1,
            max: 4,
        });
    }
    // candidate entries: (sign, coord), sign 0 meaning the zero entry
    let mut entries: Vec<(i8, usize)> = vec![(0, 0)];
    for k in 0..n {
        entries.push((1, k));
        entries.push((-1, k));
    }
    // Stage 1: all columns with squared-norm polynomial equal to |x|^2.
    let mut columns: Vec<Vec<(i8, usize)>> = Vec::new();
    let mut stack = vec![0usize; n];
    'outer: loop {
        let col: Vec<(i8, usize)> = stack.iter().map(|&e| entries[e]).collect();
        let mut counts = vec![0usize; n];
        let mut zeros = 0;
        for &(s, k) in &col {
            if s == 0 {
                zeros += 1;
            } else {
                counts[k] += 1;
            }
        }
        if zeros == 0 && counts.iter().all(|&c| c == 1) {
            columns.push(col);
        }
        // odometer increment
        for digit in stack.iter_mut() {
            *digit += 1;
            if *digit < entries.len() {
                continue 'outer;
            }
            *digit = 0;
        }
        break;
    }
    // Stage 2: backtracking over pairwise polynomially-orthogonal columns.
    fn orthogonal(a: &[(i8, usize)], b: &[(i8, usize)], n: usize) -> bool {
        // coefficient of x_i x_j in the column dot product must vanish
        let mut acc = vec![0i64; n * n];
        for (&(sa, ka), &(sb, kb)) in a.iter().zip(b) {
            let (lo, hi) = (ka.min(kb), ka.max(kb));
            acc[lo * n + hi] += i64::from(sa) * i64::from(sb);
        }
        acc.iter().all(|&v| v == 0)
    }
    fn extend(chosen: &mut Vec<usize>, columns: &[Vec<(i8, usize)>], n: usize) -> bool {
        if chosen.len() == n {
            return true;
        }
        for (idx, col) in columns.iter().enumerate() {
            if chosen.iter().all(|&c| orthogonal(&columns[c], col, n)) {
                chosen.push(idx);
                if extend(chosen, columns, n) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    let mut chosen = Vec::new();
    Ok(extend(&mut chosen, &columns, n))
}
