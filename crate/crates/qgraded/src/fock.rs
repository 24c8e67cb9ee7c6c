//! Dense matrix representations on a D-level truncated Fock space.
//!
//! The lowering generator acts as `a_q|n⟩ = √([n]_q)|n−1⟩` with
//! `[n]_q = (1−qⁿ)/(1−q)` the q-basic number, the `♮` raising generator is
//! its plain transpose, and the adjoint is its conjugate transpose (equal to
//! the `♮` generator of the conjugate parameter). Truncation necessarily
//! breaks the defining relations at the top of the space, so every operator
//! tracks `safe_rows`: identities are asserted only on the leading columns.

use ndarray::Array2;
use num_complex::Complex;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::param::{generator_grade, grade_of_product, GradeTag, QParam};
use crate::scalar::{cplx, from_usize, Real};

/// Order in which the basis states are laid out.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum BasisOrdering {
    /// `|0⟩, |1⟩, …, |D−1⟩`.
    Standard,
    /// All even levels first, then all odd levels.
    EvenOdd,
}

/// A D-dimensional truncation of the Fock space.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FockSpace {
    dim: usize,
    ordering: BasisOrdering,
}

impl FockSpace {
    /// Standard-ordered space with `dim` levels.
    pub fn new(dim: usize) -> Self {
        assert!(dim >= 2, "truncated space needs at least two levels");
        Self {
            dim,
            ordering: BasisOrdering::Standard,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ordering(&self) -> BasisOrdering {
        self.ordering
    }
}

/// The q-basic number `[n]_q = (1−qⁿ)/(1−q)`, continuously extended to `n`
/// at `q = 1`.
pub fn q_basic_number<T: Real>(n: usize, q: &QParam<T>) -> Complex<T> {
    let one = cplx(T::one());
    let qv = q.value();
    if qv == one {
        return cplx(from_usize(n));
    }
    (one - qv.powu(n as u32)) / (one - qv)
}

/// A dense operator on the truncated space with its grade tag and the size
/// of the window on which its construction is exact.
#[derive(Clone, Debug)]
pub struct FockOperator<T: Real> {
    matrix: Array2<Complex<T>>,
    tag: GradeTag<T>,
    safe_rows: usize,
    elementary: bool,
}

impl<T: Real> FockOperator<T> {
    /// Wraps an explicit matrix with a tag and a safe window.
    pub fn from_matrix(matrix: Array2<Complex<T>>, tag: GradeTag<T>, safe_rows: usize) -> Self {
        assert_eq!(matrix.nrows(), matrix.ncols(), "operators are square");
        let safe_rows = safe_rows.min(matrix.nrows());
        Self {
            matrix,
            tag,
            safe_rows,
            elementary: false,
        }
    }

    /// The identity operator: tag `(0, 1)`, exact on the whole space.
    pub fn identity(space: &FockSpace) -> Self {
        Self::from_matrix(
            Array2::eye(space.dim()),
            GradeTag::identity(),
            space.dim(),
        )
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &Array2<Complex<T>> {
        &self.matrix
    }

    pub fn tag(&self) -> GradeTag<T> {
        self.tag
    }

    /// Number of leading basis states on which the defining relations used to
    /// build this operator hold exactly despite truncation.
    pub fn safe_rows(&self) -> usize {
        self.safe_rows
    }

    pub fn is_elementary(&self) -> bool {
        self.elementary
    }

    /// Matrix product; degrees add, radii multiply, and the safe window
    /// shrinks by one ladder displacement.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        let tag = grade_of_product(&[(self.tag, T::one()), (other.tag, T::one())]);
        let safe = self.safe_rows.min(other.safe_rows).saturating_sub(1);
        Ok(Self::from_matrix(self.matrix.dot(&other.matrix), tag, safe))
    }

    /// Sum of two operators of the same grade.
    ///
    /// Sums across distinct grade tags are rejected; the bracket is defined
    /// per monomial and mixed sums must be decomposed by the caller.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        if !self.tag.close_to(&other.tag) {
            return Err(Error::MixedGrading);
        }
        Ok(Self::from_matrix(
            &self.matrix + &other.matrix,
            self.tag,
            self.safe_rows.min(other.safe_rows),
        ))
    }

    /// Scalar multiple; the tag is unchanged.
    pub fn scale(&self, c: Complex<T>) -> Self {
        Self {
            matrix: self.matrix.mapv(|z| z * c),
            tag: self.tag,
            safe_rows: self.safe_rows,
            elementary: false,
        }
    }

    /// Conjugate transpose. The tag is preserved: elementary generators share
    /// the tag of their adjoints, and tags of monomials are permutation
    /// invariant.
    pub fn adjoint(&self) -> Self {
        Self {
            matrix: self.matrix.t().mapv(|z| z.conj()),
            tag: self.tag,
            safe_rows: self.safe_rows,
            elementary: self.elementary,
        }
    }

    /// Plain transpose (the `♮` operation at the matrix level).
    pub fn transpose_natural(&self) -> Self {
        Self {
            matrix: self.matrix.t().to_owned(),
            tag: self.tag,
            safe_rows: self.safe_rows,
            elementary: self.elementary,
        }
    }

    /// Max-norm over the leading `window` columns.
    pub fn max_norm_window(&self, window: usize) -> f64 {
        window_max_norm(&self.matrix, window)
    }

    /// Max-norm over the whole matrix.
    pub fn max_norm(&self) -> f64 {
        window_max_norm(&self.matrix, self.dim())
    }
}

/// Max absolute entry over columns `< window`.
pub fn window_max_norm<T: Real>(m: &Array2<Complex<T>>, window: usize) -> f64 {
    let w = window.min(m.ncols());
    let mut best = 0.0f64;
    for j in 0..w {
        for i in 0..m.nrows() {
            let v = m[[i, j]].norm().to_f64().unwrap_or(f64::INFINITY);
            if v > best {
                best = v;
            }
        }
    }
    best
}

/// Scaled residual between two matrices on the leading `window` columns:
/// `max|x−y| / max(1, max|x|, max|y|)`.
///
/// For O(1)-sized operators this coincides with the absolute max-norm
/// residual; for operators of large magnitude (deformation parameters
/// outside the unit disc) it measures agreement relative to scale.
pub fn scaled_residual<T: Real>(
    x: &Array2<Complex<T>>,
    y: &Array2<Complex<T>>,
    window: usize,
) -> f64 {
    let w = window.min(x.ncols());
    let mut diff = 0.0f64;
    for j in 0..w {
        for i in 0..x.nrows() {
            let v = (x[[i, j]] - y[[i, j]]).norm().to_f64().unwrap_or(f64::INFINITY);
            if v > diff {
                diff = v;
            }
        }
    }
    let scale = 1.0f64
        .max(window_max_norm(x, window))
        .max(window_max_norm(y, window));
    diff / scale
}

/// Lowering generator `a_q`: entries `⟨n−1|a_q|n⟩ = √([n]_q)` on the first
/// superdiagonal (principal square root); exact on the leading `D−1` states.
pub fn annihilator<T: Real>(q: &QParam<T>, space: &FockSpace) -> FockOperator<T> {
    let d = space.dim();
    let mut m = Array2::zeros((d, d));
    for n in 1..d {
        m[[n - 1, n]] = q_basic_number(n, q).sqrt();
    }
    FockOperator {
        matrix: m,
        tag: generator_grade(q),
        safe_rows: d - 1,
        elementary: true,
    }
}

/// Raising generator `a_q^♮`: the plain transpose of `a_q`, with
/// `⟨n+1|a_q^♮|n⟩ = √([n+1]_q)`. For real `q` it coincides with the adjoint.
pub fn creator_natural<T: Real>(q: &QParam<T>, space: &FockSpace) -> FockOperator<T> {
    let a = annihilator(q, space);
    FockOperator {
        matrix: a.matrix.t().to_owned(),
        tag: a.tag,
        safe_rows: a.safe_rows,
        elementary: true,
    }
}

/// Adjoint generator `a_q^†`: the conjugate transpose of `a_q`, equal
/// entrywise to `a_{q̄}^♮` for the conjugate parameter.
pub fn adjoint_dag<T: Real>(q: &QParam<T>, space: &FockSpace) -> FockOperator<T> {
    let a = annihilator(q, space);
    FockOperator {
        matrix: a.matrix.t().mapv(|z| z.conj()),
        tag: a.tag,
        safe_rows: a.safe_rows,
        elementary: true,
    }
}

/// An operator diagonal in the standard ordering, stored by its eigenvalues.
#[derive(Clone, Debug)]
pub struct DiagonalOperator<T: Real> {
    eigenvalues: Vec<Complex<T>>,
    tag: GradeTag<T>,
}

/// Behaviour of [`DiagonalOperator::power_with`] on zero eigenvalues with a
/// negative exponent.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZeroPowerPolicy {
    /// `0^β := 0` (the default zero-preserving pseudo-power).
    PreserveZero,
    /// Fail with [`Error::SingularPower`].
    Fail,
}

impl<T: Real> DiagonalOperator<T> {
    pub fn from_eigenvalues(eigenvalues: Vec<Complex<T>>, tag: GradeTag<T>) -> Self {
        Self { eigenvalues, tag }
    }

    /// Builds eigenvalues level by level.
    pub fn from_fn(space: &FockSpace, tag: GradeTag<T>, f: impl Fn(usize) -> Complex<T>) -> Self {
        Self {
            eigenvalues: (0..space.dim()).map(f).collect(),
            tag,
        }
    }

    pub fn eigenvalues(&self) -> &[Complex<T>] {
        &self.eigenvalues
    }

    pub fn tag(&self) -> GradeTag<T> {
        self.tag
    }

    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    /// Dense form; diagonal constructions are exact on the whole space.
    pub fn to_operator(&self) -> FockOperator<T> {
        let d = self.eigenvalues.len();
        let mut m = Array2::zeros((d, d));
        for (n, &e) in self.eigenvalues.iter().enumerate() {
            m[[n, n]] = e;
        }
        FockOperator {
            matrix: m,
            tag: self.tag,
            safe_rows: d,
            elementary: false,
        }
    }

    /// Eigenvalue-wise principal power with the zero-preserving pseudo-power.
    pub fn power(&self, beta: T) -> Self {
        self.power_with(beta, ZeroPowerPolicy::PreserveZero)
            .expect("pseudo-power never fails")
    }

    /// Eigenvalue-wise principal power `λ ↦ λ^β`; the tag scales as a real
    /// power of the construction (degree `β·d`, radius `ℓ^β`).
    pub fn power_with(&self, beta: T, policy: ZeroPowerPolicy) -> Result<Self> {
        let zero = Complex::new(T::zero(), T::zero());
        let mut eigenvalues = Vec::with_capacity(self.eigenvalues.len());
        for (level, &e) in self.eigenvalues.iter().enumerate() {
            if e == zero {
                if beta < T::zero() && policy == ZeroPowerPolicy::Fail {
                    return Err(Error::SingularPower { level });
                }
                eigenvalues.push(zero);
            } else {
                eigenvalues.push(e.powf(beta));
            }
        }
        Ok(Self {
            eigenvalues,
            tag: grade_of_product(&[(self.tag, beta)]),
        })
    }
}

/// The number operator `N = diag(0, 1, …, D−1)`, tag `(0, 1)`.
pub fn number_operator<T: Real>(space: &FockSpace) -> DiagonalOperator<T> {
    DiagonalOperator::from_fn(space, GradeTag::identity(), |n| cplx(from_usize(n)))
}

/// The q-basic number operator `[N]_q = diag([n]_q)`.
///
/// Carries the tag of `a_q^♮ a_q` (degree `2√(φ/π)`, radius `r`), its
/// construction history as a quadratic expression in the generators.
pub fn basic_number_operator<T: Real>(q: &QParam<T>, space: &FockSpace) -> DiagonalOperator<T> {
    let g = generator_grade(q);
    let tag = grade_of_product(&[(g, T::one()), (g, T::one())]);
    DiagonalOperator::from_fn(space, tag, |n| q_basic_number(n, q))
}

/// The self-adjoint deformed number operator `{N}_{q̄,q} = a_q^† a_q`, with
/// eigenvalues `√([n]_{q̄}[n]_q)` (nonnegative reals).
pub fn deformed_number_operator<T: Real>(q: &QParam<T>, space: &FockSpace) -> DiagonalOperator<T> {
    let g = generator_grade(q);
    let tag = grade_of_product(&[(g, T::one()), (g, T::one())]);
    let qc = q.conj();
    DiagonalOperator::from_fn(space, tag, |n| {
        (q_basic_number(n, &qc) * q_basic_number(n, q)).sqrt()
    })
}

/// Which of the four even/odd blocks of a reordered matrix are nonzero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BlockReport {
    pub even_even: bool,
    pub even_odd: bool,
    pub odd_even: bool,
    pub odd_odd: bool,
}

impl BlockReport {
    /// Entries confined to the diagonal blocks ("even" element).
    pub fn is_even(&self) -> bool {
        !self.even_odd && !self.odd_even
    }

    /// Entries confined to the off-diagonal blocks ("odd" element).
    pub fn is_odd(&self) -> bool {
        !self.even_even && !self.odd_odd
    }
}

/// Permutation similarity from the standard ordering to the even/odd block
/// layout (`|0⟩,|2⟩,… |1⟩,|3⟩,…`), with a report of which blocks carry
/// nonzero entries. Spectra and norms are preserved.
pub fn reorder_even_odd<T: Real>(
    op: &FockOperator<T>,
    space: &FockSpace,
) -> (FockOperator<T>, BlockReport) {
    let d = space.dim();
    assert_eq!(op.dim(), d, "operator and space dimensions must agree");
    let n_even = d.div_ceil(2);
    // perm[i] = standard-basis index of the i-th reordered state
    let perm: Vec<usize> = (0..d).step_by(2).chain((1..d).step_by(2)).collect();
    let m = Array2::from_shape_fn((d, d), |(i, j)| op.matrix[[perm[i], perm[j]]]);
    let tol = 1e-12 * window_max_norm(&m, d).max(1.0);
    let block_nonzero = |rows: std::ops::Range<usize>, cols: std::ops::Range<usize>| {
        rows.clone().any(|i| {
            cols.clone()
                .any(|j| m[[i, j]].norm().to_f64().unwrap_or(0.0) > tol)
        })
    };
    let report = BlockReport {
        even_even: block_nonzero(0..n_even, 0..n_even),
        even_odd: block_nonzero(0..n_even, n_even..d),
        odd_even: block_nonzero(n_even..d, 0..n_even),
        odd_odd: block_nonzero(n_even..d, n_even..d),
    };
    (
        FockOperator {
            matrix: m,
            tag: op.tag,
            safe_rows: op.safe_rows,
            elementary: op.elementary,
        },
        report,
    )
}

/// Result of the q→0 mutual-inverse check.
#[derive(Clone, Debug, Serialize)]
pub struct Q0Report {
    /// Residual of `a_0 a_0^♮ = I` on the safe window (columns `< D−1`).
    pub lower_raise_residual: f64,
    /// Residual of `a_0^♮ a_0 = I − |0⟩⟨0|` on the full space.
    pub raise_lower_residual: f64,
    pub pass: bool,
}

/// Verifies that the `q→0` generators are mutually inverse off the vacuum:
/// `a_0 a_0^♮ = I` on the safe window and `a_0^♮ a_0 = I − |0⟩⟨0|` exactly.
///
/// The basic numbers at `q = 0` are `[0]_0 = 0` and `[n]_0 = 1` for `n ≥ 1`,
/// so `[N]_0` is the identity only off the vacuum.
pub fn limit_check_q0<T: Real>(space: &FockSpace, tol: f64) -> Q0Report {
    let d = space.dim();
    let mut a0 = Array2::<Complex<T>>::zeros((d, d));
    for n in 1..d {
        a0[[n - 1, n]] = cplx(T::one());
    }
    let a0n = a0.t().to_owned();
    let eye = Array2::<Complex<T>>::eye(d);
    let lower_raise = a0.dot(&a0n);
    let mut eye_minus_vac = eye.clone();
    eye_minus_vac[[0, 0]] = Complex::new(T::zero(), T::zero());
    let raise_lower = a0n.dot(&a0);
    let r1 = scaled_residual(&lower_raise, &eye, d - 1);
    let r2 = scaled_residual(&raise_lower, &eye_minus_vac, d);
    Q0Report {
        lower_raise_residual: r1,
        raise_lower_residual: r2,
        pass: r1 <= tol && r2 == 0.0,
    }
}

/// Serializable dump of one operator matrix (row-major `[re, im]` pairs).
#[derive(Clone, Debug, Serialize)]
pub struct MatrixDump {
    pub dim: usize,
    pub ordering: String,
    pub q: ComplexParts,
    pub entries: Vec<[f64; 2]>,
}

/// Complex value split into parts for serialization.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct ComplexParts {
    pub re: f64,
    pub im: f64,
}

impl MatrixDump {
    pub fn new<T: Real>(
        op: &FockOperator<T>,
        q: &QParam<T>,
        ordering: BasisOrdering,
    ) -> Self {
        let d = op.dim();
        let mut entries = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                let z = op.matrix[[i, j]];
                entries.push([z.re.to_f64().unwrap_or(0.0), z.im.to_f64().unwrap_or(0.0)]);
            }
        }
        Self {
            dim: d,
            ordering: match ordering {
                BasisOrdering::Standard => "standard".into(),
                BasisOrdering::EvenOdd => "evenodd".into(),
            },
            q: ComplexParts {
                re: q.value().re.to_f64().unwrap_or(0.0),
                im: q.value().im.to_f64().unwrap_or(0.0),
            },
            entries,
        }
    }
}
