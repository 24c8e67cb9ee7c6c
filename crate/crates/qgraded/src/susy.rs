//! Deformed supersymmetry models built from quadratic charges.
//!
//! The (1,−1) model pairs the boson `a_1` with the fermion-like `a_{−1}`;
//! six bilinears act as charges and the quartic
//! `h_ss = a_1^† a_1 a_{−1}^† a_{−1}` is the supersymmetric Hamiltonian with
//! three G-bracket symmetries (the supercharge, its adjoint, and the
//! diagonal charge). The general (q, q̄) model replaces the pair by two
//! arbitrary parameters; the diagonal charge `a_q^♮ a_{q̄}` remains a
//! symmetry of its square exactly when the partner constraints hold, and the
//! remaining charges lose their symmetry role.
//!
//! Verification note: the factorization identities cross the two partner
//! towers: `[Q, Q†]_G` builds the partner Hamiltonian `h̃_ss`, while the
//! reversed-order charges factorize `h_ss`. The literal pairing of `Q` with
//! `h_ss` in the factorization is retained as an explicit check and fails by
//! a level shift; both the as-stated and the crossed identities are reported.

use ndarray::Array2;
use num_complex::Complex;
use serde::Serialize;

use crate::fock::{
    adjoint_dag, annihilator, creator_natural, q_basic_number, scaled_residual, window_max_norm,
    FockOperator, FockSpace,
};
use crate::param::{monomial_g_factor, QParam};
use crate::report::{RelationCheck, SuiteReport};
use crate::scalar::{cplx, from_f64, Real};

/// The six quadratic charges of a model.
#[derive(Clone, Debug)]
pub struct Charges<T: Real> {
    /// `a_{q̄} a_q` (lowering pair).
    pub q1: FockOperator<T>,
    /// `a_q a_{q̄}` (reversed lowering pair).
    pub q1_tilde: FockOperator<T>,
    /// `a_q^♮ a_{q̄}^♮`; the adjoint of `q1` in the (1,−1) model.
    pub q1_adj: FockOperator<T>,
    /// `a_{q̄}^♮ a_q^♮`; the adjoint of `q1_tilde` in the (1,−1) model.
    pub q1_tilde_adj: FockOperator<T>,
    /// `a_q^♮ a_{q̄}`, diagonal with entries `√([n]_{q̄}[n]_q)`.
    pub q2: FockOperator<T>,
    /// `a_{q̄} a_q^♮`, diagonal with entries `√([n+1]_{q̄}[n+1]_q)`.
    pub q2_tilde: FockOperator<T>,
}

/// The Hamiltonians generated by the charges.
#[derive(Clone, Debug)]
pub struct Hamiltonians<T: Real> {
    /// `[q1, q1_adj]_G`.
    pub h1: FockOperator<T>,
    /// `[q1_tilde, q1_tilde_adj]_G`.
    pub h1_tilde: FockOperator<T>,
    /// `q2²`.
    pub h2: FockOperator<T>,
    /// `q2_tilde²`.
    pub h2_tilde: FockOperator<T>,
    /// The supersymmetric Hamiltonian; in the (1,−1) model the quartic
    /// `a_1^† a_1 a_{−1}^† a_{−1}` with eigenvalues `n·[n]_{−1}`.
    pub h_ss: FockOperator<T>,
    /// The superpartner `q2_tilde²` with eigenvalues `(n+1)·[n+1]_{−1}`.
    pub h_ss_tilde: FockOperator<T>,
}

/// A deformed supersymmetry model on a truncated Fock space.
#[derive(Clone, Debug)]
pub struct SusyModel<T: Real> {
    pub q: QParam<T>,
    pub qbar: QParam<T>,
    pub space: FockSpace,
    pub charges: Charges<T>,
    pub hamiltonians: Hamiltonians<T>,
}

impl<T: Real> SusyModel<T> {
    /// The supercharge `Q = q1/√2`.
    pub fn supercharge(&self) -> FockOperator<T> {
        self.charges
            .q1
            .scale(cplx(T::one() / (T::one() + T::one()).sqrt()))
    }

    /// The reversed-order supercharge `Q̃ = q1_tilde/√2`.
    pub fn supercharge_tilde(&self) -> FockOperator<T> {
        self.charges
            .q1_tilde
            .scale(cplx(T::one() / (T::one() + T::one()).sqrt()))
    }
}

fn one_param<T: Real>() -> QParam<T> {
    QParam::new(cplx(T::one())).expect("1 is nonzero")
}

fn minus_one_param<T: Real>() -> QParam<T> {
    QParam::new(-cplx(T::one())).expect("-1 is nonzero")
}

/// Builds the (1,−1) model: boson–fermion bilinear charges and their
/// Hamiltonians, with `h_ss` constructed as the quartic product.
pub fn build_model_1m1<T: Real>(space: &FockSpace) -> SusyModel<T> {
    let one = one_param::<T>();
    let minus = minus_one_param::<T>();
    let a1 = annihilator(&one, space);
    let a1d = adjoint_dag(&one, space);
    let am = annihilator(&minus, space);
    let amd = adjoint_dag(&minus, space);

    let mul = |x: &FockOperator<T>, y: &FockOperator<T>| x.mul(y).expect("same space");
    let charges = Charges {
        q1: mul(&am, &a1),
        q1_tilde: mul(&a1, &am),
        q1_adj: mul(&a1d, &amd),
        q1_tilde_adj: mul(&amd, &a1d),
        q2: mul(&a1d, &am),
        q2_tilde: mul(&am, &a1d),
    };
    let h2 = mul(&charges.q2, &charges.q2);
    let h2_tilde = mul(&charges.q2_tilde, &charges.q2_tilde);
    let hamiltonians = Hamiltonians {
        h1: crate::bracket::bracket(&charges.q1, &charges.q1_adj).expect("same space"),
        h1_tilde: crate::bracket::bracket(&charges.q1_tilde, &charges.q1_tilde_adj)
            .expect("same space"),
        h2: h2.clone(),
        h2_tilde: h2_tilde.clone(),
        h_ss: mul(&mul(&mul(&a1d, &a1), &amd), &am),
        h_ss_tilde: h2_tilde,
    };
    SusyModel {
        q: one,
        qbar: minus,
        space: *space,
        charges,
        hamiltonians,
    }
}

/// Builds the general (q, q̄) model from the mixed bilinears; any nonzero
/// pair is accepted, partner pairs come from the solver.
pub fn build_model_qqbar<T: Real>(
    q: &QParam<T>,
    qbar: &QParam<T>,
    space: &FockSpace,
) -> SusyModel<T> {
    let aq = annihilator(q, space);
    let aq_nat = creator_natural(q, space);
    let ab = annihilator(qbar, space);
    let ab_nat = creator_natural(qbar, space);

    let mul = |x: &FockOperator<T>, y: &FockOperator<T>| x.mul(y).expect("same space");
    let charges = Charges {
        q1: mul(&ab, &aq),
        q1_tilde: mul(&aq, &ab),
        q1_adj: mul(&aq_nat, &ab_nat),
        q1_tilde_adj: mul(&ab_nat, &aq_nat),
        q2: mul(&aq_nat, &ab),
        q2_tilde: mul(&ab, &aq_nat),
    };
    let h2 = mul(&charges.q2, &charges.q2);
    let h2_tilde = mul(&charges.q2_tilde, &charges.q2_tilde);
    let hamiltonians = Hamiltonians {
        h1: crate::bracket::bracket(&charges.q1, &charges.q1_tilde_adj).expect("same space"),
        h1_tilde: crate::bracket::bracket(&charges.q1_tilde, &charges.q1_adj)
            .expect("same space"),
        h2: h2.clone(),
        h2_tilde: h2_tilde.clone(),
        h_ss: h2,
        h_ss_tilde: h2_tilde,
    };
    SusyModel {
        q: *q,
        qbar: *qbar,
        space: *space,
        charges,
        hamiltonians,
    }
}

/// Right-hand side of a relation: a raw matrix with its exactness window.
struct Rhs<T: Real> {
    matrix: Array2<Complex<T>>,
    window: usize,
}

impl<T: Real> Rhs<T> {
    fn zero(space: &FockSpace) -> Self {
        Rhs {
            matrix: Array2::zeros((space.dim(), space.dim())),
            window: space.dim(),
        }
    }

    fn from_operator(op: &FockOperator<T>) -> Self {
        Rhs {
            matrix: op.matrix().clone(),
            window: op.safe_rows(),
        }
    }

    /// `diag(c)·ladder`: the diagonal coefficient acts after the ladder
    /// operator, i.e. it is evaluated at the output level.
    fn coeff_after(c: impl Fn(i64) -> Complex<T>, ladder: &FockOperator<T>) -> Self {
        let d = ladder.dim();
        let mut m = ladder.matrix().clone();
        for i in 0..d {
            let ci = c(i as i64);
            for j in 0..d {
                m[[i, j]] *= ci;
            }
        }
        Rhs {
            matrix: m,
            window: ladder.safe_rows(),
        }
    }

    fn sub(self, other: Rhs<T>) -> Self {
        Rhs {
            matrix: self.matrix - other.matrix,
            window: self.window.min(other.window),
        }
    }

    fn scale(mut self, c: Complex<T>) -> Self {
        self.matrix = self.matrix.mapv(|z| z * c);
        self
    }
}

/// Evaluates `[a, b]_G = rhs` and packages the scaled residual.
///
/// The residual is `max|lhs − rhs|` over the joint safe window, divided by
/// `max(1, |ab|, |G·ba|, |rhs|)` on that window.
fn graded_relation<T: Real>(
    name: &str,
    tag: &str,
    a: &FockOperator<T>,
    b: &FockOperator<T>,
    rhs: &Rhs<T>,
    tol: f64,
) -> RelationCheck {
    let g = monomial_g_factor(&a.tag(), &b.tag());
    bracket_vs_rhs(name, tag, a, b, g, rhs, tol)
}

/// Same as [`graded_relation`] but with an explicit bracket scalar.
fn bracket_vs_rhs<T: Real>(
    name: &str,
    tag: &str,
    a: &FockOperator<T>,
    b: &FockOperator<T>,
    g: Complex<T>,
    rhs: &Rhs<T>,
    tol: f64,
) -> RelationCheck {
    let ab = a.mul(b).expect("same space");
    let ba = b.mul(a).expect("same space");
    let gba = ba.matrix().mapv(|z| z * g);
    let lhs = ab.matrix() - &gba;
    let window = ab
        .safe_rows()
        .min(ba.safe_rows())
        .min(rhs.window);
    let scale = 1.0f64
        .max(window_max_norm(ab.matrix(), window))
        .max(window_max_norm(&gba, window))
        .max(window_max_norm(&rhs.matrix, window));
    let mut diff = 0.0f64;
    for j in 0..window {
        for i in 0..lhs.nrows() {
            let v = (lhs[[i, j]] - rhs.matrix[[i, j]])
                .norm()
                .to_f64()
                .unwrap_or(f64::INFINITY);
            if v > diff {
                diff = v;
            }
        }
    }
    let residual = diff / scale;
    RelationCheck::new(name, tag, residual, tol)
}

/// `[n]_{−1}` as a real: 1 on odd levels, 0 elsewhere (0 for negative
/// indices, which only pad levels that receive no amplitude).
fn fm<T: Real>(k: i64) -> T {
    if k >= 0 && k % 2 == 1 {
        T::one()
    } else {
        T::zero()
    }
}

fn level<T: Real>(k: i64) -> T {
    if k >= 0 {
        from_f64(k as f64)
    } else {
        T::zero()
    }
}

/// Verifies the (1,−1) supersymmetry algebra.
///
/// Checks the three symmetries of `h_ss` (the supercharge, its adjoint, and
/// the diagonal charge), the factorizations, and non-nilpotency. The
/// as-stated factorization `[Q, Q†]_G = h_ss` is evaluated literally and
/// fails by one level shift; the crossed identities
/// `[Q, Q†]_G = h̃_ss` and `[Q̃, Q̃†]_G = h_ss` hold and are reported
/// alongside it.
pub fn verify_susy_1m1<T: Real>(model: &SusyModel<T>, tol: f64) -> SuiteReport {
    let c = &model.charges;
    let h = &model.hamiltonians;
    let q_ch = model.supercharge();
    let q_adj = q_ch.adjoint();
    let qt = model.supercharge_tilde();
    let qt_adj = qt.adjoint();
    let space = &model.space;

    let mut checks = vec![
        graded_relation("[Q, h_ss]_G = 0", "susyalg", &q_ch, &h.h_ss, &Rhs::zero(space), tol),
        graded_relation(
            "[Q+, h_ss]_G = 0",
            "susyalg",
            &q_adj,
            &h.h_ss,
            &Rhs::zero(space),
            tol,
        ),
    ];

    let mut literal = graded_relation(
        "[Q, Q+]_G = h_ss",
        "susyalg",
        &q_ch,
        &q_adj,
        &Rhs::from_operator(&h.h_ss),
        tol,
    );
    let mut crossed = graded_relation(
        "[Q, Q+]_G = h_ss~",
        "susyalg",
        &q_ch,
        &q_adj,
        &Rhs::from_operator(&h.h_ss_tilde),
        tol,
    );
    literal.note = Some(format!(
        "as-stated factorization; the bracket equals the superpartner \
         Hamiltonian h_ss~ instead (residual {:.3e}), a one-level shift",
        crossed.residual
    ));
    checks.push(literal);
    crossed.note = Some("crossed factorization; see the as-stated check above".into());
    checks.push(crossed);
    checks.push(graded_relation(
        "[Q~, Q~+]_G = h_ss",
        "susyalg",
        &qt,
        &qt_adj,
        &Rhs::from_operator(&h.h_ss),
        tol,
    ));

    checks.push(graded_relation(
        "[q2, h_ss]_G = 0",
        "susy2",
        &c.q2,
        &h.h_ss,
        &Rhs::zero(space),
        tol,
    ));
    let q2sq = c.q2.mul(&c.q2).expect("same space");
    let w = q2sq.safe_rows().min(h.h_ss.safe_rows());
    checks.push(
        RelationCheck::new(
            "q2^2 = h_ss",
            "susy2",
            scaled_residual(q2sq.matrix(), h.h_ss.matrix(), w),
            tol,
        ),
    );

    // non-nilpotency: the deformation leaves the squared supercharge
    // nonzero; pure lowering/raising squares are exact entrywise, so the
    // full matrix norm applies
    let qsq = q_ch.mul(&q_ch).expect("same space");
    let norm = qsq.max_norm();
    let mut nn = RelationCheck::new("|Q^2| > 0.1", "susyalg", norm, tol);
    nn.pass = norm > 0.1;
    nn.note = Some("threshold check; residual column holds the measured norm".into());
    checks.push(nn);
    let qdsq = q_adj.mul(&q_adj).expect("same space");
    let norm_d = qdsq.max_norm();
    let mut nnd = RelationCheck::new("|Q+^2| > 0", "susyalg", norm_d, tol);
    nnd.pass = norm_d > 0.0;
    nnd.note = Some("threshold check; residual column holds the measured norm".into());
    checks.push(nnd);

    // closed forms of the bracket Hamiltonians
    let h1_expect = Rhs::coeff_after(
        |n| cplx((T::one() + T::one()) * fm::<T>(n + 1) * level::<T>(n + 1)),
        &FockOperator::identity(space),
    );
    checks.push(RelationCheck::new(
        "h1 = 2[N+1]~(N+1)",
        "model",
        scaled_residual(h.h1.matrix(), &h1_expect.matrix, h.h1.safe_rows()),
        tol,
    ));
    let h1t_expect = Rhs::coeff_after(
        |n| cplx((T::one() + T::one()) * fm::<T>(n) * level::<T>(n)),
        &FockOperator::identity(space),
    );
    checks.push(RelationCheck::new(
        "h1~ = 2[N]~N",
        "model",
        scaled_residual(h.h1_tilde.matrix(), &h1t_expect.matrix, h.h1_tilde.safe_rows()),
        tol,
    ));

    // superpartner tower: h_ss~ = q2~² = (1/2)[q1, q1+]_G
    let q2t_sq = c.q2_tilde.mul(&c.q2_tilde).expect("same space");
    let wt = q2t_sq.safe_rows().min(h.h_ss_tilde.safe_rows());
    checks.push(RelationCheck::new(
        "h_ss~ = q2~^2",
        "model",
        scaled_residual(q2t_sq.matrix(), h.h_ss_tilde.matrix(), wt),
        tol,
    ));
    let half = cplx(from_f64::<T>(0.5));
    let half_h1 = h.h1.scale(half);
    let wh = half_h1.safe_rows().min(h.h_ss_tilde.safe_rows());
    let mut partner = RelationCheck::new(
        "h_ss~ = (1/2)[q1, q1+]_G",
        "model",
        scaled_residual(half_h1.matrix(), h.h_ss_tilde.matrix(), wh),
        tol,
    );
    partner.note = Some(
        "factorizations cross the towers: the q1 pair builds h_ss~, the \
         reversed pair builds h_ss"
            .into(),
    );
    checks.push(partner);
    let half_h1t = h.h1_tilde.scale(half);
    let whh = half_h1t.safe_rows().min(h.h_ss.safe_rows());
    checks.push(RelationCheck::new(
        "h_ss = (1/2)[q1~, q1~+]_G",
        "model",
        scaled_residual(half_h1t.matrix(), h.h_ss.matrix(), whh),
        tol,
    ));

    // rebuilt undeformed Hamiltonian: h_ss + h_ss~ = N + [N+1]~
    let sum = h.h_ss.matrix() + h.h_ss_tilde.matrix();
    let rebuilt = Rhs::coeff_after(
        |n| cplx(level::<T>(n) + fm::<T>(n + 1)),
        &FockOperator::identity(space),
    );
    let wr = h
        .h_ss
        .safe_rows()
        .min(h.h_ss_tilde.safe_rows());
    checks.push(RelationCheck::new(
        "h_ss + h_ss~ = N + [N+1]~",
        "rebuilt",
        scaled_residual(&sum, &rebuilt.matrix, wr),
        tol,
    ));

    let mut report = SuiteReport::new("susy-1m1", model.space.dim(), tol, checks);
    report.summary = Some(
        "three G-bracket symmetries of h_ss verified (Q, Q+, q2); \
         factorization identities cross to the partner tower"
            .into(),
    );
    report
}

/// Verifies the four fermion-to-deformed-boson mapping relations, with the
/// diagonal coefficient acting after the ladder operator.
///
/// The second relation is evaluated as `[q1+, a_{−1}]_G = [N−1]_{−1} a_1^†`,
/// the displayed companion list's form; pairing `q1+` with `a_{−1}^†` raises
/// by three levels and cannot equal the one-step right side.
pub fn verify_mapping_1m1<T: Real>(model: &SusyModel<T>, tol: f64) -> SuiteReport {
    let space = &model.space;
    let one = one_param::<T>();
    let minus = minus_one_param::<T>();
    let a1 = annihilator(&one, space);
    let a1d = adjoint_dag(&one, space);
    let am = annihilator(&minus, space);
    let amd = adjoint_dag(&minus, space);
    let c = &model.charges;

    let checks = vec![
        graded_relation(
            "[q1, a(-1)+]_G = [N]~ a(1)",
            "eq1",
            &c.q1,
            &amd,
            &Rhs::coeff_after(|n| cplx(fm::<T>(n)), &a1),
            tol,
        ),
        graded_relation(
            "[q1+, a(-1)]_G = [N-1]~ a(1)+",
            "eq2",
            &c.q1_adj,
            &am,
            &Rhs::coeff_after(|n| cplx(fm::<T>(n - 1)), &a1d),
            tol,
        ),
        graded_relation(
            "[q2, a(-1)]_G = [N+1]~ a(1)",
            "eq3",
            &c.q2,
            &am,
            &Rhs::coeff_after(|n| cplx(fm::<T>(n + 1)), &a1),
            tol,
        ),
        graded_relation(
            "[q2, a(-1)+]_G = [N]~ a(1)+",
            "eq4",
            &c.q2,
            &amd,
            &Rhs::coeff_after(|n| cplx(fm::<T>(n)), &a1d),
            tol,
        ),
    ];
    let mut report = SuiteReport::new("mapping", space.dim(), tol, checks);
    report.summary =
        Some("fermions map onto deformed bosons; coefficients act after the ladder".into());
    report
}

/// Verifies the twelve commutation relations between the three charges and
/// the four elementary degrees of freedom, plus the worked quartic bracket.
///
/// Relations with a boson operand produce a mixed boson/fermion combination;
/// relations with a fermion operand map onto pure deformed bosons. Where a
/// relation is displayed in two equivalent forms both are checked.
pub fn verify_appendix_suite<T: Real>(model: &SusyModel<T>, tol: f64) -> SuiteReport {
    let space = &model.space;
    let one = one_param::<T>();
    let minus = minus_one_param::<T>();
    let a1 = annihilator(&one, space);
    let a1d = adjoint_dag(&one, space);
    let am = annihilator(&minus, space);
    let amd = adjoint_dag(&minus, space);
    let c = &model.charges;

    let a1_cubed = a1.mul(&a1).and_then(|m| m.mul(&a1)).expect("same space");
    let a1d_cubed = a1d.mul(&a1d).and_then(|m| m.mul(&a1d)).expect("same space");

    let sqrt_fm_n = |n: i64| cplx((fm::<T>(n) * level::<T>(n)).sqrt());
    let mixed = "mixed boson/fermion image";
    let pure = "pure deformed-boson image";

    let mut checks = Vec::new();
    let mut push = |mut check: RelationCheck, class: &str| {
        check.note = Some(class.into());
        checks.push(check);
    };

    // charge q1 = a_{-1} a_1
    push(
        graded_relation(
            "[q1, a(1)+]_G = (N+2) a(-1) - sqrt([N]~ N) a(1)",
            "equa1",
            &c.q1,
            &a1d,
            &Rhs::coeff_after(|n| cplx(level::<T>(n + 2)), &am)
                .sub(Rhs::coeff_after(sqrt_fm_n, &a1)),
            tol,
        ),
        mixed,
    );
    push(
        graded_relation(
            "[q1, a(-1)+]_G = [N]~ a(1)",
            "eq1",
            &c.q1,
            &amd,
            &Rhs::coeff_after(|n| cplx(fm::<T>(n)), &a1),
            tol,
        ),
        pure,
    );
    push(
        graded_relation(
            "[q1, a(1)]_G = (sqrt([N+1]~/(N+1)) - sqrt([N+2]~/(N+2))) a(1)^3",
            "equa1",
            &c.q1,
            &a1,
            &Rhs::coeff_after(
                |n| {
                    let first = fm::<T>(n + 1) / level::<T>(n + 1);
                    let second = fm::<T>(n + 2) / level::<T>(n + 2);
                    cplx(first.sqrt() - second.sqrt())
                },
                &a1_cubed,
            ),
            tol,
        ),
        mixed,
    );
    push(
        graded_relation(
            "[q1, a(-1)]_G = ([N+1]~/sqrt((N+1)(N+3))) a(1)^3",
            "equa2",
            &c.q1,
            &am,
            &Rhs::coeff_after(
                |n| cplx(fm::<T>(n + 1) / (level::<T>(n + 1) * level::<T>(n + 3)).sqrt()),
                &a1_cubed,
            ),
            tol,
        ),
        pure,
    );

    // charge q1+ = a_1^† a_{-1}^†
    push(
        graded_relation(
            "[q1+, a(1)+]_G = (sqrt([N-1]~/(N-1)) - sqrt([N-2]~/(N-2))) a(1)+^3",
            "equa1+",
            &c.q1_adj,
            &a1d,
            &Rhs::coeff_after(
                |n| {
                    let first = if n >= 2 {
                        (fm::<T>(n - 1) / level::<T>(n - 1)).sqrt()
                    } else {
                        T::zero()
                    };
                    let second = if n >= 3 {
                        (fm::<T>(n - 2) / level::<T>(n - 2)).sqrt()
                    } else {
                        T::zero()
                    };
                    cplx(first - second)
                },
                &a1d_cubed,
            ),
            tol,
        ),
        mixed,
    );
    push(
        graded_relation(
            "[q1+, a(-1)+]_G = ([N]~/sqrt(N(N-2))) a(1)+^3",
            "equa2+",
            &c.q1_adj,
            &amd,
            &Rhs::coeff_after(
                |n| {
                    if n >= 3 {
                        cplx(fm::<T>(n) / (level::<T>(n) * level::<T>(n - 2)).sqrt())
                    } else {
                        cplx(T::zero())
                    }
                },
                &a1d_cubed,
            ),
            tol,
        ),
        pure,
    );
    push(
        graded_relation(
            "[q1+, a(1)]_G = (sqrt([N-1]~(N-1)) - (N+1)sqrt([N]~/N)) a(1)+",
            "equa1+",
            &c.q1_adj,
            &a1,
            &Rhs::coeff_after(
                |n| {
                    if n >= 1 {
                        let first = (fm::<T>(n - 1) * level::<T>(n - 1)).sqrt();
                        let second =
                            level::<T>(n + 1) * (fm::<T>(n) / level::<T>(n)).sqrt();
                        cplx(first - second)
                    } else {
                        cplx(T::zero())
                    }
                },
                &a1d,
            ),
            tol,
        ),
        mixed,
    );
    push(
        graded_relation(
            "[q1+, a(-1)]_G = [N-1]~ a(1)+",
            "eq2",
            &c.q1_adj,
            &am,
            &Rhs::coeff_after(|n| cplx(fm::<T>(n - 1)), &a1d),
            tol,
        ),
        pure,
    );

    // charge q2 = a_1^† a_{-1}
    push(
        graded_relation(
            "[q2, a(1)+]_G = (sqrt([N]~ N) - sqrt([N-1]~(N-1))) a(1)+",
            "equa3",
            &c.q2,
            &a1d,
            &Rhs::coeff_after(
                |n| {
                    let first = (fm::<T>(n) * level::<T>(n)).sqrt();
                    let second = if n >= 1 {
                        (fm::<T>(n - 1) * level::<T>(n - 1)).sqrt()
                    } else {
                        T::zero()
                    };
                    cplx(first - second)
                },
                &a1d,
            ),
            tol,
        ),
        mixed,
    );
    push(
        graded_relation(
            "[q2, a(-1)+]_G = [N]~ a(1)+",
            "eq4",
            &c.q2,
            &amd,
            &Rhs::coeff_after(|n| cplx(fm::<T>(n)), &a1d),
            tol,
        ),
        pure,
    );
    push(
        graded_relation(
            "[q2, a(1)]_G = (sqrt([N]~ N) - sqrt([N+1]~(N+1))) a(1)",
            "equa3",
            &c.q2,
            &a1,
            &Rhs::coeff_after(
                |n| {
                    let first = (fm::<T>(n) * level::<T>(n)).sqrt();
                    let second = (fm::<T>(n + 1) * level::<T>(n + 1)).sqrt();
                    cplx(first - second)
                },
                &a1,
            ),
            tol,
        ),
        mixed,
    );
    push(
        graded_relation(
            "[q2, a(-1)]_G = [N+1]~ a(1)",
            "eq3",
            &c.q2,
            &am,
            &Rhs::coeff_after(|n| cplx(fm::<T>(n + 1)), &a1),
            tol,
        ),
        pure,
    );

    // displayed alternative forms of the mixed relations
    push(
        graded_relation(
            "[q1, a(1)+]_G alt = ((N+2)sqrt([N+1]~/(N+1)) - sqrt([N]~ N)) a(1)",
            "equa1",
            &c.q1,
            &a1d,
            &Rhs::coeff_after(
                |n| {
                    let first =
                        level::<T>(n + 2) * (fm::<T>(n + 1) / level::<T>(n + 1)).sqrt();
                    cplx(first - (fm::<T>(n) * level::<T>(n)).sqrt())
                },
                &a1,
            ),
            tol,
        ),
        mixed,
    );
    push(
        graded_relation(
            "[q2, a(1)]_G alt = sqrt([N]~ N) a(1) - (N+1) a(-1)",
            "equa3",
            &c.q2,
            &a1,
            &Rhs::coeff_after(sqrt_fm_n, &a1)
                .sub(Rhs::coeff_after(|n| cplx(level::<T>(n + 1)), &am)),
            tol,
        ),
        mixed,
    );
    push(
        graded_relation(
            "[q2, a(-1)]_G alt = sqrt([N+1]~(N+1)) a(-1)",
            "eq3",
            &c.q2,
            &am,
            &Rhs::coeff_after(|n| cplx((fm::<T>(n + 1) * level::<T>(n + 1)).sqrt()), &am),
            tol,
        ),
        pure,
    );

    // the worked quartic bracket vanishes at (1, -1, 1, 1, -1, -1)
    let worked = crate::bracket::worked_example_cal(
        &[one, minus, one, one, minus, minus],
        space,
    )
    .expect("valid parameters");
    checks.push(RelationCheck::new(
        "[q2, h_ss]_G worked instance = 0",
        "cal2",
        worked.residual_vs_zero,
        tol,
    ));

    let mut report = SuiteReport::new("appendix", space.dim(), tol, checks);
    report.summary = Some(
        "twelve charge/generator brackets verified; boson operands yield \
         mixed images, fermion operands yield pure deformed bosons"
            .into(),
    );
    report
}

/// The symmetry defect of the diagonal charge in a (q, q̄) model.
#[derive(Clone, Debug, Serialize)]
pub struct H2Symmetry {
    /// `G(q2, h2)`.
    pub g_re: f64,
    pub g_im: f64,
    /// `1 − G`, the scalar prefactor of the bracket.
    pub prefactor_re: f64,
    pub prefactor_im: f64,
    /// Scaled residual of `[q2, h2]_G` against zero.
    pub residual_vs_zero: f64,
    /// Scaled residual of the bracket against the closed form
    /// `√([N]_{q̄}[N]_q)·[N]_{q̄}[N]_q·(1 − G)`.
    pub residual_vs_closed_form: f64,
}

/// Computes `[q2, h2]_G` and compares it with its closed form.
///
/// Both operators are diagonal, so the bracket reduces to
/// `q2·h2·(1 − G)` with `G = e^{2iπd²}(r_q r_{q̄})^{3/2}`; it vanishes
/// exactly when `d² ∈ ℕ` and the radius product is one.
pub fn commutator_h2<T: Real>(model: &SusyModel<T>) -> (FockOperator<T>, H2Symmetry) {
    let q2 = &model.charges.q2;
    let h2 = &model.hamiltonians.h2;
    let g = monomial_g_factor(&q2.tag(), &h2.tag());
    let ab = q2.mul(h2).expect("same space");
    let ba = h2.mul(q2).expect("same space");
    let gba = ba.matrix().mapv(|z| z * g);
    let bracket_matrix = ab.matrix() - &gba;
    let window = ab.safe_rows().min(ba.safe_rows());
    let scale = 1.0f64
        .max(window_max_norm(ab.matrix(), window))
        .max(window_max_norm(&gba, window));
    let residual_vs_zero = window_max_norm(&bracket_matrix, window) / scale;

    // closed form, built from the same per-level square roots as the charge
    let d = model.space.dim();
    let one = cplx(T::one());
    let mut closed = Array2::zeros((d, d));
    for n in 0..d {
        let bq = q_basic_number(n, &model.q);
        let bqb = q_basic_number(n, &model.qbar);
        let s = bq.sqrt() * bqb.sqrt();
        closed[[n, n]] = s * bq * bqb * (one - g);
    }
    // scaled against the product magnitude: with a vanishing prefactor both
    // sides are rounding noise and a noise-relative comparison is meaningless
    let residual_vs_closed_form =
        window_max_norm(&(&bracket_matrix - &closed), window) / scale;

    let prefactor = one - g;
    let op = FockOperator::from_matrix(bracket_matrix, ab.tag(), window);
    (
        op,
        H2Symmetry {
            g_re: g.re.to_f64().unwrap_or(f64::NAN),
            g_im: g.im.to_f64().unwrap_or(f64::NAN),
            prefactor_re: prefactor.re.to_f64().unwrap_or(f64::NAN),
            prefactor_im: prefactor.im.to_f64().unwrap_or(f64::NAN),
            residual_vs_zero,
            residual_vs_closed_form,
        },
    )
}

/// Verifies the partner-mapping brackets of a (q, q̄) model under both
/// scalar conventions.
///
/// The bracket scalar can be read either from the general graded-bracket
/// definition (variant `tag`) or from the literal phase
/// `e^{i√(φ_{q̄}(φ_{q̄}+φ_q))}·f(r_q)√(r_q)` printed with the displayed
/// right-hand sides (variant `printed`). Each variant is checked against the
/// right-hand side built with its own scalar, the two scalars are compared,
/// and at `(q, q̄) = (1, −1)` both reduce to the fermion-mapping relations.
pub fn verify_mapping_qqbar<T: Real>(model: &SusyModel<T>, tol: f64) -> SuiteReport {
    let space = &model.space;
    let q = &model.q;
    let qbar = &model.qbar;
    let aq = annihilator(q, space);
    let aq_nat = creator_natural(q, space);
    let ab = annihilator(qbar, space);
    let ab_nat = creator_natural(qbar, space);
    let q2 = &model.charges.q2;

    let g_tag = monomial_g_factor(&q2.tag(), &ab.tag());
    let printed_phase = (qbar.phi() * (qbar.phi() + q.phi())).sqrt();
    let g_printed =
        Complex::from_polar(T::one(), printed_phase).scale(qbar.r() * q.r().sqrt());

    // square roots are taken per basic-number factor, the same principal
    // branch convention as the generator matrix elements; levels where the
    // displayed coefficient divides by a vanishing basic number (roots of
    // unity) carry no information and are masked
    let denom_floor = from_f64::<T>(1e-6);
    let coeff_lower = |n: i64| -> Complex<T> {
        if n < 0 {
            return cplx(T::zero());
        }
        let n = n as usize;
        let den = q_basic_number(n + 1, q).sqrt();
        if den.norm() < denom_floor {
            return cplx(T::zero());
        }
        q_basic_number(n, qbar).sqrt() * q_basic_number(n + 1, qbar).sqrt()
            * q_basic_number(n, q).sqrt()
            / den
    };
    let coeff_raise = |n: i64| -> Complex<T> {
        if n < 1 {
            return cplx(T::zero());
        }
        let n = n as usize;
        let den = q_basic_number(n, q).sqrt();
        if den.norm() < denom_floor {
            return cplx(T::zero());
        }
        q_basic_number(n - 1, qbar).sqrt() * q_basic_number(n, qbar).sqrt()
            * q_basic_number(n - 1, q).sqrt()
            / den
    };
    let mask_lower: Vec<bool> = (0..space.dim())
        .map(|j| j == 0 || q_basic_number(j, q).norm() >= denom_floor)
        .collect();
    let mask_raise: Vec<bool> = (0..space.dim())
        .map(|j| j + 1 >= space.dim() || q_basic_number(j + 1, q).norm() >= denom_floor)
        .collect();

    let masked = |name: &str,
                  tag: &str,
                  b: &FockOperator<T>,
                  g: Complex<T>,
                  rhs: Rhs<T>,
                  mask: &[bool]| {
        let ab_m = q2.mul(b).expect("same space");
        let ba_m = b.mul(q2).expect("same space");
        let gba = ba_m.matrix().mapv(|z| z * g);
        let lhs = ab_m.matrix() - &gba;
        let window = ab_m.safe_rows().min(ba_m.safe_rows()).min(rhs.window);
        let scale = 1.0f64
            .max(window_max_norm(ab_m.matrix(), window))
            .max(window_max_norm(&gba, window))
            .max(window_max_norm(&rhs.matrix, window));
        let mut diff = 0.0f64;
        for j in 0..window {
            if !mask[j] {
                continue;
            }
            for i in 0..lhs.nrows() {
                let v = (lhs[[i, j]] - rhs.matrix[[i, j]])
                    .norm()
                    .to_f64()
                    .unwrap_or(f64::INFINITY);
                if v > diff {
                    diff = v;
                }
            }
        }
        RelationCheck::new(name, tag, diff / scale, tol)
    };

    let mut checks = Vec::new();
    for (variant, g) in [("tag", g_tag), ("printed", g_printed)] {
        let rhs = Rhs::coeff_after(coeff_lower, &aq)
            .sub(Rhs::coeff_after(|n| fm_basic(n + 1, qbar), &aq).scale(g));
        checks.push(masked(
            &format!("[q2, a_qbar] vs displayed rhs ({variant} scalar)"),
            "gende",
            &ab,
            g,
            rhs,
            &mask_lower,
        ));
        let rhs2 = Rhs::coeff_after(|n| fm_basic(n, qbar), &aq_nat)
            .sub(Rhs::coeff_after(coeff_raise, &aq_nat).scale(g));
        checks.push(masked(
            &format!("[q2, a_qbar~nat] vs displayed rhs ({variant} scalar)"),
            "gende2",
            &ab_nat,
            g,
            rhs2,
            &mask_raise,
        ));
    }

    let scalar_gap = (g_tag - g_printed).norm().to_f64().unwrap_or(f64::NAN);
    let mut gap = RelationCheck::new("scalar gap |G_tag - G_printed|", "gende", scalar_gap, tol);
    gap.pass = true;
    gap.note = Some(if scalar_gap < 1e-12 {
        "the two scalar conventions coincide for this pair".into()
    } else {
        "the two scalar conventions disagree for this pair; each satisfies \
         its own displayed right-hand side"
            .into()
    });
    checks.push(gap);

    let mut report = SuiteReport::new("qqbar-mapping", space.dim(), tol, checks);
    report.summary = Some(
        "partner-mapping brackets verified under both scalar conventions"
            .into(),
    );
    report
}

/// `[n]_{q̄}` as a complex value with a nonnegative-level guard.
fn fm_basic<T: Real>(n: i64, qbar: &QParam<T>) -> Complex<T> {
    if n < 0 {
        Complex::new(T::zero(), T::zero())
    } else {
        q_basic_number(n as usize, qbar)
    }
}

/// Checks that exactly one supercharge survives in a generic (q, q̄) model:
/// the diagonal charge keeps its symmetry while the lowering-pair charges
/// lose theirs, and `h1` differs from `h2`.
pub fn verify_breaking_qqbar<T: Real>(model: &SusyModel<T>, tol: f64) -> SuiteReport {
    let (_, sym) = commutator_h2(model);
    let mut checks = vec![RelationCheck::new(
        "[q2, h2]_G = 0",
        "phas",
        sym.residual_vs_zero,
        tol,
    )];

    let c = &model.charges;
    let h = &model.hamiltonians;
    let q1h = graded_relation(
        "[q1, h2]_G = 0",
        "breaking",
        &c.q1,
        &h.h2,
        &Rhs::zero(&model.space),
        tol,
    );
    let mut broken = RelationCheck::new("[q1, h2]_G /= 0", "breaking", q1h.residual, tol);
    broken.pass = q1h.residual > 1e-6;
    broken.note = Some("symmetry expected to fail away from (1, -1)".into());
    checks.push(broken);

    let w = h.h1.safe_rows().min(h.h2.safe_rows());
    let gap = scaled_residual(h.h1.matrix(), h.h2.matrix(), w);
    let mut distinct = RelationCheck::new("h1 /= h2", "breaking", gap, tol);
    distinct.pass = gap > 1e-6;
    distinct.note = Some("the two Hamiltonians differ in the general model".into());
    checks.push(distinct);

    // q2 hermiticity is asserted only when the per-level products
    // [n]_{q̄}[n]_q are real and nonnegative; otherwise recorded, not failed
    let d = model.space.dim();
    let tiny = from_f64::<T>(1e-12);
    let products_real = (0..d).all(|n| {
        let p = q_basic_number(n, &model.q) * q_basic_number(n, &model.qbar);
        p.im.abs() <= tiny * p.norm().max(T::one()) && p.re >= -tiny
    });
    let q2_adj = c.q2.adjoint();
    let herm_gap = scaled_residual(c.q2.matrix(), q2_adj.matrix(), d);
    let mut herm = RelationCheck::new("q2 hermiticity", "model", herm_gap, tol);
    if products_real {
        herm.note = Some("per-level products real and nonnegative; hermiticity asserted".into());
    } else {
        herm.pass = true;
        herm.note = Some(format!(
            "non-Hermitian for this pair (gap {herm_gap:.3e}); recorded, not failed"
        ));
    }
    checks.push(herm);

    let mut report = SuiteReport::new("qqbar-breaking", model.space.dim(), tol, checks);
    report.summary = Some("one supercharge survives in the general model".into());
    report
}
