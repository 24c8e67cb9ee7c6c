//! Formal words in elementary generators and a single-parameter
//! normal-ordering rewriter with exact `ℤ[q]` coefficients.
//!
//! Words over one parameter are rewritten with `a a^♮ → I + q·a^♮a` until all
//! raising factors stand left of all lowering factors. Coefficients stay
//! exact integer polynomials in `q`; the complex value is substituted only
//! when a normal form is evaluated as a matrix. The rewriter serves as an
//! independent oracle against direct matrix products.
//!
//! Words mixing different parameters are never rewritten symbolically (no
//! commutation rule between generators of different algebras is assumed)
//! and are only evaluated at the matrix level.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fock::{annihilator, creator_natural, FockOperator, FockSpace};
use crate::param::{generator_grade, grade_of_product, GradeTag, QParam};
use crate::scalar::{cplx, from_usize, Real};

/// Default bound on the total exponent accepted by [`normal_order`].
pub const DEFAULT_REWRITE_BOUND: usize = 12;

/// Elementary generator symbols.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    /// Lowering generator `a_q`.
    A,
    /// Raising generator `a_q^♮`.
    ANat,
    /// Identity.
    Id,
}

/// One factor of a word: a generator power with its parameter.
#[derive(Clone, Copy, Debug)]
pub struct Factor<T: Real> {
    pub gen: Generator,
    pub q: QParam<T>,
    pub exponent: u32,
}

/// A formal product of generator powers with a scalar coefficient.
#[derive(Clone, Debug)]
pub struct Word<T: Real> {
    pub factors: Vec<Factor<T>>,
    pub coefficient: Complex<T>,
}

impl<T: Real> Word<T> {
    pub fn new(factors: Vec<Factor<T>>) -> Self {
        Self {
            factors,
            coefficient: cplx(T::one()),
        }
    }

    /// The empty word: `c·I` with degree 0 and radius 1.
    pub fn identity(coefficient: Complex<T>) -> Self {
        Self {
            factors: Vec::new(),
            coefficient,
        }
    }

    pub fn scaled(mut self, c: Complex<T>) -> Self {
        self.coefficient *= c;
        self
    }

    /// Total exponent over non-identity factors.
    pub fn total_exponent(&self) -> usize {
        self.factors
            .iter()
            .filter(|f| f.gen != Generator::Id)
            .map(|f| f.exponent as usize)
            .sum()
    }

    /// Grade tag of the word: degrees add and radii multiply over factors.
    pub fn tag(&self) -> GradeTag<T> {
        let parts: Vec<(GradeTag<T>, T)> = self
            .factors
            .iter()
            .map(|f| {
                let tag = match f.gen {
                    Generator::Id => GradeTag::identity(),
                    _ => generator_grade(&f.q),
                };
                (tag, from_usize(f.exponent as usize))
            })
            .collect();
        grade_of_product(&parts)
    }

    /// Ordered matrix product of the factor representations.
    pub fn evaluate(&self, space: &FockSpace) -> FockOperator<T> {
        let mut acc: Option<FockOperator<T>> = None;
        for f in &self.factors {
            if f.gen == Generator::Id {
                continue;
            }
            for _ in 0..f.exponent {
                let op = match f.gen {
                    Generator::A => annihilator(&f.q, space),
                    Generator::ANat => creator_natural(&f.q, space),
                    Generator::Id => unreachable!(),
                };
                acc = Some(match acc {
                    None => op,
                    Some(m) => m.mul(&op).expect("same space"),
                });
            }
        }
        let op = match acc {
            None => FockOperator::identity(space),
            Some(m) => m,
        };
        // the word's own tag, not the one accumulated by the products: the
        // two agree, but the word is authoritative for its construction
        FockOperator::from_matrix(
            op.matrix().mapv(|z| z * self.coefficient),
            self.tag(),
            op.safe_rows(),
        )
    }
}

/// An integer polynomial in `q`, coefficients in ascending degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QPoly(Vec<i128>);

impl QPoly {
    pub fn zero() -> Self {
        QPoly(Vec::new())
    }

    pub fn one() -> Self {
        QPoly(vec![1])
    }

    /// The q-integer `[k]_q = 1 + q + … + q^{k−1}`.
    pub fn q_integer(k: usize) -> Self {
        QPoly(vec![1; k])
    }

    /// The q-factorial `[n]_q! = Π_{j=1..n} [j]_q`.
    pub fn q_factorial(n: usize) -> Self {
        let mut acc = QPoly::one();
        for j in 1..=n {
            acc = acc.mul(&QPoly::q_integer(j));
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coefficients(&self) -> &[i128] {
        &self.0
    }

    fn trim(mut self) -> Self {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
        self
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        let mut out = vec![0i128; n];
        for (i, c) in self.0.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.0.iter().enumerate() {
            out[i] += c;
        }
        QPoly(out).trim()
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![0i128; self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly(out).trim()
    }

    /// Multiplication by `q^s`.
    pub fn shift(&self, s: usize) -> Self {
        if self.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![0i128; s];
        out.extend_from_slice(&self.0);
        QPoly(out)
    }

    /// Substitutes a complex value for `q` (Horner form).
    pub fn eval<T: Real>(&self, q: Complex<T>) -> Complex<T> {
        let mut acc = Complex::new(T::zero(), T::zero());
        for &c in self.0.iter().rev() {
            let cf = T::from_i128(c).expect("coefficient fits scalar");
            acc = acc * q + cplx(cf);
        }
        acc
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " {} ", if c < 0 { "-" } else { "+" })?;
            } else if c < 0 {
                write!(f, "-")?;
            }
            first = false;
            let a = c.unsigned_abs();
            match k {
                0 => write!(f, "{a}")?,
                _ => {
                    if a != 1 {
                        write!(f, "{a}")?;
                    }
                    if k == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// One normally ordered term `coefficient·(a^♮)^k a^l`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormalTerm {
    /// Raising power `k`.
    pub creators: u32,
    /// Lowering power `l`.
    pub annihilators: u32,
    pub coefficient: QPoly,
}

/// Normal form of a single-parameter word: all raising factors left of all
/// lowering factors, coefficients exact in `ℤ[q]`.
#[derive(Clone, Debug)]
pub struct NormalForm<T: Real> {
    pub q: QParam<T>,
    /// Scalar carried over from the input word.
    pub scalar: Complex<T>,
    /// Grade tag of the input word (rewriting is grade-preserving; the
    /// identity term carries the conventional tag `(0, 1)`).
    pub tag: GradeTag<T>,
    pub terms: Vec<NormalTerm>,
}

impl<T: Real> NormalForm<T> {
    /// Coefficient of the `(k, l)` term, zero if absent.
    pub fn coefficient(&self, creators: u32, annihilators: u32) -> QPoly {
        self.terms
            .iter()
            .find(|t| t.creators == creators && t.annihilators == annihilators)
            .map(|t| t.coefficient.clone())
            .unwrap_or_else(QPoly::zero)
    }

    /// Evaluates `scalar·Σ c_{kl}(q)·(a^♮)^k a^l` as a matrix.
    pub fn evaluate(&self, space: &FockSpace) -> FockOperator<T> {
        let a = annihilator(&self.q, space);
        let an = creator_natural(&self.q, space);
        let d = space.dim();
        let mut acc = ndarray::Array2::zeros((d, d));
        let mut safe = d;
        for term in &self.terms {
            let mut m = FockOperator::identity(space);
            for _ in 0..term.creators {
                m = m.mul(&an).expect("same space");
            }
            for _ in 0..term.annihilators {
                m = m.mul(&a).expect("same space");
            }
            safe = safe.min(m.safe_rows());
            let c = term.coefficient.eval(self.q.value()) * self.scalar;
            acc = acc + m.matrix().mapv(|z| z * c);
        }
        FockOperator::from_matrix(acc, self.tag, safe)
    }
}

/// Rewrites a single-parameter word to its normal form with the default
/// exponent bound.
pub fn normal_order<T: Real>(word: &Word<T>) -> Result<NormalForm<T>> {
    normal_order_bounded(word, DEFAULT_REWRITE_BOUND)
}

/// Rewrites a single-parameter word to its normal form.
///
/// Processes factors right to left; prepending a lowering generator to a
/// normally ordered term uses
///
/// ```text
/// a·(a^♮)^k = q^k (a^♮)^k a + [k]_q (a^♮)^{k−1},
/// ```
///
/// so each step stays exact in `ℤ[q]`. The fixed point is unique.
pub fn normal_order_bounded<T: Real>(word: &Word<T>, bound: usize) -> Result<NormalForm<T>> {
    let len = word.total_exponent();
    if len > bound {
        return Err(Error::WordTooLong { len, bound });
    }
    let mut q: Option<QParam<T>> = None;
    for f in &word.factors {
        if f.gen == Generator::Id || f.exponent == 0 {
            continue;
        }
        match q {
            None => q = Some(f.q),
            Some(prev) if prev.value() == f.q.value() => {}
            Some(_) => return Err(Error::MixedParameters),
        }
    }
    // a pure-identity word is a constant in any algebra; fix q = 1
    let q = match q {
        Some(q) => q,
        None => QParam::new(cplx(T::one()))?,
    };

    let mut terms: BTreeMap<(u32, u32), QPoly> = BTreeMap::new();
    terms.insert((0, 0), QPoly::one());
    for f in word.factors.iter().rev() {
        if f.gen == Generator::Id {
            continue;
        }
        for _ in 0..f.exponent {
            let mut next: BTreeMap<(u32, u32), QPoly> = BTreeMap::new();
            let mut push = |key: (u32, u32), poly: QPoly| {
                if poly.is_zero() {
                    return;
                }
                let entry = next.entry(key).or_insert_with(QPoly::zero);
                *entry = entry.add(&poly);
            };
            for ((k, l), c) in &terms {
                match f.gen {
                    Generator::ANat => push((k + 1, *l), c.clone()),
                    Generator::A => {
                        push((*k, l + 1), c.shift(*k as usize));
                        if *k > 0 {
                            push((k - 1, *l), c.mul(&QPoly::q_integer(*k as usize)));
                        }
                    }
                    Generator::Id => unreachable!(),
                }
            }
            terms = next;
        }
    }

    Ok(NormalForm {
        q,
        scalar: word.coefficient,
        tag: word.tag(),
        terms: terms
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|((k, l), c)| NormalTerm {
                creators: k,
                annihilators: l,
                coefficient: c,
            })
            .collect(),
    })
}

/// Parses the compact word syntax used by the command line:
///
/// ```text
/// word   := term (('*' | whitespace) term)*
/// term   := gen '(' q ')' ('^' uint)?  |  'id'
/// gen    := 'aq' | 'a' | 'anat' | 'adag'
/// q      := float | float ',' float | float '@' float
/// ```
///
/// `aq`/`a` is the lowering generator, `anat` the raising generator, and
/// `adag(q)` the adjoint, stored as `anat` of the conjugate parameter.
pub fn parse_word<T: Real>(input: &str) -> Result<Word<T>> {
    let mut factors = Vec::new();
    let cleaned = input.replace('*', " ");
    for tok in cleaned.split_whitespace() {
        if tok == "id" {
            factors.push(Factor {
                gen: Generator::Id,
                q: QParam::new(cplx(T::one()))?,
                exponent: 1,
            });
            continue;
        }
        let open = tok
            .find('(')
            .ok_or_else(|| Error::Parse(format!("expected '(' in '{tok}'")))?;
        let close = tok
            .find(')')
            .ok_or_else(|| Error::Parse(format!("expected ')' in '{tok}'")))?;
        if close < open {
            return Err(Error::Parse(format!("mismatched parentheses in '{tok}'")));
        }
        let name = &tok[..open];
        let qstr = &tok[open + 1..close];
        let rest = &tok[close + 1..];
        let exponent = if rest.is_empty() {
            1
        } else if let Some(e) = rest.strip_prefix('^') {
            e.parse::<u32>()
                .map_err(|_| Error::Parse(format!("invalid exponent '{e}'")))?
        } else {
            return Err(Error::Parse(format!("unexpected trailing '{rest}'")));
        };
        let q = QParam::parse(qstr)?;
        let (gen, q) = match name {
            "a" | "aq" => (Generator::A, q),
            "anat" => (Generator::ANat, q),
            "adag" => (Generator::ANat, q.conj()),
            other => return Err(Error::Parse(format!("unknown generator '{other}'"))),
        };
        factors.push(Factor { gen, q, exponent });
    }
    if factors.is_empty() {
        return Err(Error::Parse("empty word".into()));
    }
    Ok(Word::new(factors))
}
