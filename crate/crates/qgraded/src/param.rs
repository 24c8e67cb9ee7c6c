//! Deformation parameters and the degree/radius grading calculus.
//!
//! A nonzero complex parameter `q = r·e^{iφ}` is stored in polar form with the
//! phase reduced to `[0, 2π)`. Each elementary generator of the algebra with
//! parameter `q` carries the grade tag
//!
//! ```text
//! degree = √(φ/π),    radius = √r,
//! ```
//!
//! the identity carries `(0, 1)`, degrees add and radii multiply over
//! products, and real powers scale them. The scalar entering the graded
//! bracket of two tagged monomials is `e^{iπ·d_A·d_B}·ℓ_A·ℓ_B`.

use num_complex::Complex;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::{cplx, from_f64, Real};

/// Tolerance used when comparing grade tags for equality.
pub const TAG_TOL: f64 = 1e-9;

/// A nonzero complex deformation parameter in polar form.
///
/// The phase is always the representative in `[0, 2π)`. Parameters of modulus
/// greater than one are accepted; [`QParam::inside_disc`] reports whether the
/// value lies in the closed punctured unit disc.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QParam<T: Real> {
    value: Complex<T>,
    r: T,
    phi: T,
}

impl<T: Real> QParam<T> {
    /// Builds a parameter from its complex value, normalizing to polar form.
    pub fn new(value: Complex<T>) -> Result<Self> {
        if value.re == T::zero() && value.im == T::zero() {
            return Err(Error::ZeroParameter);
        }
        let r = value.norm();
        let mut phi = value.im.atan2(value.re);
        if phi < T::zero() {
            phi += T::TAU();
        }
        // atan2 returns (−π, π]; after the shift the phase is in [0, 2π).
        Ok(Self { value, r, phi })
    }

    /// Builds a parameter from modulus and phase; the phase is reduced
    /// to `[0, 2π)` and the stored value is `r·e^{iφ}`.
    pub fn from_polar(r: T, phi: T) -> Result<Self> {
        if r <= T::zero() || r.is_nan() {
            return Err(Error::ZeroParameter);
        }
        let mut phi = phi.rem_euclid(&T::TAU());
        if phi >= T::TAU() || phi < T::zero() {
            phi = T::zero();
        }
        Ok(Self {
            value: Complex::from_polar(r, phi),
            r,
            phi,
        })
    }

    /// Parses `"re,im"`, `"r@phi"`, or a bare real number.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let num = |t: &str| -> Result<T> {
            t.trim()
                .parse::<f64>()
                .map(from_f64)
                .map_err(|_| Error::Parse(format!("invalid number '{t}'")))
        };
        if let Some((a, b)) = s.split_once('@') {
            Self::from_polar(num(a)?, num(b)?)
        } else if let Some((a, b)) = s.split_once(',') {
            Self::new(Complex::new(num(a)?, num(b)?))
        } else {
            Self::new(cplx(num(s)?))
        }
    }

    pub fn value(&self) -> Complex<T> {
        self.value
    }

    /// Modulus `r > 0`.
    pub fn r(&self) -> T {
        self.r
    }

    /// Phase in `[0, 2π)`.
    pub fn phi(&self) -> T {
        self.phi
    }

    /// Whether the parameter lies in the closed punctured unit disc.
    pub fn inside_disc(&self) -> bool {
        self.r <= T::one()
    }

    /// Complex conjugate parameter.
    pub fn conj(&self) -> Self {
        Self::new(self.value.conj()).expect("conjugate of nonzero is nonzero")
    }
}

/// The `(degree, radius)` pair attached to every operator expression.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct GradeTag<T: Real> {
    /// Nonnegative real degree; `√(φ/π)` for an elementary generator.
    pub degree: T,
    /// Positive real radius; `√r` for an elementary generator.
    pub radius: T,
}

impl<T: Real> GradeTag<T> {
    /// Tag of the identity and of plain scalars: degree 0, radius 1.
    pub fn identity() -> Self {
        Self {
            degree: T::zero(),
            radius: T::one(),
        }
    }

    /// Tag equality up to [`TAG_TOL`].
    pub fn close_to(&self, other: &Self) -> bool {
        let tol = from_f64::<T>(TAG_TOL);
        (self.degree - other.degree).abs() <= tol && (self.radius - other.radius).abs() <= tol
    }
}

/// Grade of an elementary generator with parameter `q`: `(√(φ/π), √r)`.
///
/// The lowering and raising generators of one algebra share this tag.
pub fn generator_grade<T: Real>(q: &QParam<T>) -> GradeTag<T> {
    GradeTag {
        degree: (q.phi() / T::PI()).sqrt(),
        radius: q.r().sqrt(),
    }
}

/// Grade of a product of (real) powers of tagged factors: degrees add
/// weighted by exponent, radii multiply raised to the exponent.
///
/// Order-independent. Non-integer exponents are meaningful only for
/// diagonal operands (see `fock::DiagonalOperator::power`).
pub fn grade_of_product<T: Real>(parts: &[(GradeTag<T>, T)]) -> GradeTag<T> {
    let mut degree = T::zero();
    let mut radius = T::one();
    for (tag, exp) in parts {
        degree += *exp * tag.degree;
        radius *= tag.radius.powf(*exp);
    }
    GradeTag { degree, radius }
}

/// `e^{iπt}` with exact `±1` on integer `t`.
///
/// Degrees of the limit algebras (`q = ±1`) are exact integers, and the
/// graded bracket must reduce to exact commutators/anticommutators there;
/// the integer branch avoids the `sin(π)` rounding residue.
pub fn unit_phase<T: Real>(t: T) -> Complex<T> {
    if t.fract() == T::zero() {
        let two = T::one() + T::one();
        if t.abs().rem_euclid(&two) == T::one() {
            -cplx(T::one())
        } else {
            cplx(T::one())
        }
    } else {
        Complex::from_polar(T::one(), T::PI() * t)
    }
}

/// Bracket scalar for a pair of elementary generators:
/// `g = e^{iπ·d_x·d_y}·ℓ_x·ℓ_y`.
///
/// `g(boson, boson) = 1`, `g(fermion, fermion) = −1`, and for a real
/// parameter `q ∈ (0, 1]`, `g(a_q, a_q) = q`.
pub fn g_factor<T: Real>(x: &GradeTag<T>, y: &GradeTag<T>) -> Complex<T> {
    unit_phase(x.degree * y.degree).scale(x.radius * y.radius)
}

/// Bracket scalar for a pair of graded monomials:
/// `G = e^{iπ·d_A·d_B}·ℓ(A)·ℓ(B)` with `ℓ(AB) = ℓ(A)ℓ(B)`.
///
/// Coincides with [`g_factor`] on elementary tags and is symmetric in its
/// arguments.
pub fn monomial_g_factor<T: Real>(a: &GradeTag<T>, b: &GradeTag<T>) -> Complex<T> {
    g_factor(a, b)
}
