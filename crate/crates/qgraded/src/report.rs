//! Named verification suites and machine-readable reports.
//!
//! Every suite evaluates a list of relations at a configured tolerance and
//! dimension and reports one `{relation, residual, pass}` row per relation.
//! Residuals are max-norm differences on the joint truncation-safe window,
//! scaled by `max(1, operand magnitudes)`; for O(1) operators this is the
//! plain absolute residual.

use ndarray::Array2;
use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bracket::bracket;
use crate::error::{Error, Result};
use crate::fock::{
    adjoint_dag, annihilator, creator_natural, limit_check_q0, reorder_even_odd, scaled_residual, FockSpace,
};
use crate::param::QParam;
use crate::partner::{solve_partners, PartnerSet};
use crate::scalar::cplx;
use crate::susy::{
    build_model_1m1, build_model_qqbar, commutator_h2, verify_appendix_suite,
    verify_breaking_qqbar, verify_mapping_1m1, verify_mapping_qqbar, verify_susy_1m1,
};
use crate::word::{normal_order_bounded, Factor, Generator, Word};

/// One verified relation.
#[derive(Clone, Debug, Serialize)]
pub struct RelationCheck {
    pub name: String,
    /// Short identifier of the relation family.
    pub tag: String,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl RelationCheck {
    pub fn new(name: &str, tag: &str, residual: f64, tolerance: f64) -> Self {
        Self {
            name: name.to_string(),
            tag: tag.to_string(),
            residual,
            tolerance,
            pass: residual <= tolerance,
            note: None,
        }
    }

    pub fn with_note(mut self, note: &str) -> Self {
        self.note = Some(note.to_string());
        self
    }
}

/// Outcome of one named suite.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub dim: usize,
    pub tolerance: f64,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub summary: Option<String>,
    pub checks: Vec<RelationCheck>,
}

impl SuiteReport {
    pub fn new(suite: &str, dim: usize, tolerance: f64, checks: Vec<RelationCheck>) -> Self {
        let passed = checks.iter().all(|c| c.pass);
        Self {
            suite: suite.to_string(),
            dim,
            tolerance,
            passed,
            summary: None,
            checks,
        }
    }

    /// First failing relation as a [`Error::VerificationFailure`].
    pub fn ensure(&self) -> Result<()> {
        match self.checks.iter().find(|c| !c.pass) {
            None => Ok(()),
            Some(c) => Err(Error::VerificationFailure {
                relation: c.name.clone(),
                residual: c.residual,
            }),
        }
    }

    pub fn render_text(&self) -> String {
        let mut out = format!(
            "suite {} (dim {}, tol {:.1e}): {}\n",
            self.suite,
            self.dim,
            self.tolerance,
            if self.passed { "PASS" } else { "FAIL" }
        );
        for c in &self.checks {
            out.push_str(&format!(
                "  [{}] {:<58} residual {:.3e}{}\n",
                if c.pass { "ok" } else { "FAIL" },
                c.name,
                c.residual,
                c.note
                    .as_deref()
                    .map(|n| format!("  ({n})"))
                    .unwrap_or_default()
            ));
        }
        out
    }

    pub fn render_csv(&self) -> String {
        let mut out = String::from("suite,relation,tag,residual,tolerance,pass\n");
        for c in &self.checks {
            out.push_str(&format!(
                "{},\"{}\",{},{},{},{}\n",
                self.suite, c.name, c.tag, c.residual, c.tolerance, c.pass
            ));
        }
        out
    }
}

/// Configuration shared by the suites and the CLI.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub dim: usize,
    pub tolerance: f64,
    /// Deformation parameters for grid sweeps of the defining relation.
    pub q_grid: Vec<QParam<f64>>,
    pub seed: u64,
}

impl RunConfig {
    pub fn new(dim: usize, tolerance: f64, seed: u64) -> Result<Self> {
        if dim < 4 {
            return Err(Error::InvalidConfig(format!("dim {dim} < 4")));
        }
        if tolerance <= 0.0 || tolerance.is_nan() {
            return Err(Error::InvalidConfig("tolerance must be positive".into()));
        }
        Ok(Self {
            dim,
            tolerance,
            q_grid: default_grid(),
            seed,
        })
    }

    pub fn space(&self) -> FockSpace {
        FockSpace::new(self.dim)
    }
}

impl Default for RunConfig {
    fn default() -> Self {
        Self::new(64, 1e-12, 7).expect("defaults are valid")
    }
}

/// 40-point grid over the punctured disc: four moduli, ten phases, phases
/// offset from the positive real axis.
pub fn default_grid() -> Vec<QParam<f64>> {
    let mut grid = Vec::with_capacity(40);
    for r in [0.2, 0.5, 0.8, 1.0] {
        for j in 0..10 {
            let phi = std::f64::consts::TAU * (j as f64 + 0.5) / 10.0;
            grid.push(QParam::from_polar(r, phi).expect("nonzero"));
        }
    }
    grid
}

/// Names accepted by [`run_suite`].
pub const SUITES: [&str; 8] = [
    "defining",
    "fermionic",
    "limits",
    "susy-1m1",
    "mapping",
    "appendix",
    "qqbar",
    "all",
];

/// Runs one named suite (or all of them).
pub fn run_suite(name: &str, config: &RunConfig) -> Result<Vec<SuiteReport>> {
    match name {
        "defining" => Ok(vec![run_defining(config)]),
        "fermionic" => Ok(vec![run_fermionic(config)]),
        "limits" => Ok(vec![run_limits(config)]),
        "susy-1m1" => Ok(vec![verify_susy_1m1(
            &build_model_1m1::<f64>(&config.space()),
            config.tolerance,
        )]),
        "mapping" => Ok(vec![verify_mapping_1m1(
            &build_model_1m1::<f64>(&config.space()),
            config.tolerance,
        )]),
        "appendix" => Ok(vec![verify_appendix_suite(
            &build_model_1m1::<f64>(&config.space()),
            config.tolerance,
        )]),
        "qqbar" => Ok(run_qqbar(config)),
        "all" => {
            let mut reports = vec![
                run_defining(config),
                run_fermionic(config),
                run_limits(config),
            ];
            let model = build_model_1m1::<f64>(&config.space());
            reports.push(verify_susy_1m1(&model, config.tolerance));
            reports.push(verify_mapping_1m1(&model, config.tolerance));
            reports.push(verify_appendix_suite(&model, config.tolerance));
            reports.extend(run_qqbar(config));
            reports.push(run_oracle(config));
            Ok(reports)
        }
        other => Err(Error::UnknownSuite(other.to_string())),
    }
}

/// Defining relation `a_q a_q^♮ − q a_q^♮ a_q = I` over the configured grid,
/// plus the structural generator identities.
pub fn run_defining(config: &RunConfig) -> SuiteReport {
    let space = config.space();
    let d = config.dim;
    let tol = config.tolerance;
    let eye = Array2::<Complex<f64>>::eye(d);
    let mut worst = 0.0f64;
    for q in &config.q_grid {
        let a = annihilator(q, &space);
        let an = creator_natural(q, &space);
        let lhs = a.mul(&an).expect("same space");
        let rhs = an.mul(&a).expect("same space").scale(q.value());
        let defect = lhs.matrix() - rhs.matrix();
        // the relation is exact off the top level; project onto D−1 columns
        worst = worst.max(scaled_residual(&defect, &eye, d - 1));
    }
    let mut checks = vec![RelationCheck::new(
        &format!("a_q a_q~nat - q a_q~nat a_q = I over {} grid points", config.q_grid.len()),
        "qdef",
        worst,
        tol,
    )];

    // conjugation: the adjoint generator equals the natural generator of q̄
    let mut worst_conj = 0.0f64;
    for q in &config.q_grid {
        let dag = adjoint_dag(q, &space);
        let natc = creator_natural(&q.conj(), &space);
        worst_conj = worst_conj.max(scaled_residual(dag.matrix(), natc.matrix(), d));
    }
    checks.push(RelationCheck::new(
        "a_q+ = a_qbar~nat entrywise over the grid",
        "relat",
        worst_conj,
        tol,
    ));

    // involution: transpose of transpose is the identity map on generators
    let q = config.q_grid[7];
    let a = annihilator(&q, &space);
    checks.push(RelationCheck::new(
        "(a_q~nat)~nat = a_q",
        "relat",
        scaled_residual(
            a.transpose_natural().transpose_natural().matrix(),
            a.matrix(),
            d,
        ),
        tol,
    ));

    // two-step lowering amplitude
    let a2 = a.mul(&a).expect("same space");
    let mut expected = Array2::<Complex<f64>>::zeros((d, d));
    for n in 2..d {
        expected[[n - 2, n]] = (crate::fock::q_basic_number(n - 1, &q)
            * crate::fock::q_basic_number(n, &q))
        .sqrt();
    }
    checks.push(RelationCheck::new(
        "a_q^2 |n> = sqrt([n-1][n]) |n-2>",
        "twostep",
        scaled_residual(a2.matrix(), &expected, d),
        tol,
    ));

    let mut report = SuiteReport::new("defining", d, tol, checks);
    report.summary = Some("defining relation and generator structure over the q grid".into());
    report
}

/// Fermion-like limit: anticommutator identity and exact nilpotency.
pub fn run_fermionic(config: &RunConfig) -> SuiteReport {
    let space = config.space();
    let d = config.dim;
    let tol = config.tolerance;
    let minus = QParam::new(cplx(-1.0f64)).expect("nonzero");
    let f = annihilator(&minus, &space);
    let fd = adjoint_dag(&minus, &space);
    let eye = Array2::<Complex<f64>>::eye(d);

    let anti = bracket(&f, &fd).expect("same space");
    let mut checks = vec![RelationCheck::new(
        "a(-1) a(-1)+ + a(-1)+ a(-1) = I",
        "ferm",
        scaled_residual(anti.matrix(), &eye, anti.safe_rows()),
        tol,
    )];

    let nil = f.mul(&f).expect("same space").max_norm();
    let nil_d = fd.mul(&fd).expect("same space").max_norm();
    let mut c = RelationCheck::new("a(-1)^2 = 0 exactly", "ferm", nil, 0.0);
    c.pass = nil == 0.0;
    checks.push(c);
    let mut c = RelationCheck::new("(a(-1)+)^2 = 0 exactly", "ferm", nil_d, 0.0);
    c.pass = nil_d == 0.0;
    checks.push(c);

    // the fermion-number operator has degree 2 yet the anticommutator holds
    let number = fd.mul(&f).expect("same space");
    let mut c = RelationCheck::new(
        "fermion number has degree 2, radius 1",
        "grading",
        (number.tag().degree - 2.0).abs() + (number.tag().radius - 1.0).abs(),
        tol,
    );
    c.note = Some("degrees are not reduced mod 2".into());
    checks.push(c);

    let mut report = SuiteReport::new("fermionic", d, tol, checks);
    report.summary = Some("fermionic limit of the deformed algebra".into());
    report
}

/// Limit checks: q→0 mutual inverses, the q = ±1 basic-number patterns, and
/// continuity toward the boson point.
pub fn run_limits(config: &RunConfig) -> SuiteReport {
    let space = config.space();
    let d = config.dim;
    let tol = config.tolerance;
    let q0 = limit_check_q0::<f64>(&space, tol);
    let mut checks = vec![
        RelationCheck::new("a_0 a_0~nat = I off the top level", "q0", q0.lower_raise_residual, tol),
        RelationCheck::new(
            "a_0~nat a_0 = I - |0><0| exactly",
            "q0",
            q0.raise_lower_residual,
            0.0,
        ),
    ];
    checks[1].pass = q0.raise_lower_residual == 0.0;

    let minus = QParam::new(cplx(-1.0f64)).expect("nonzero");
    let mut worst = 0.0f64;
    for n in 0..d {
        let expect = if n % 2 == 1 { 1.0 } else { 0.0 };
        worst = worst.max((crate::fock::q_basic_number(n, &minus).re - expect).abs());
    }
    checks.push(RelationCheck::new(
        "[2p](-1) = 0, [2p+1](-1) = 1",
        "limn",
        worst,
        0.0,
    ));
    checks.last_mut().expect("nonempty").pass = worst == 0.0;

    // entries approach the boson point continuously from inside the disc
    let bos = annihilator(&QParam::new(cplx(1.0f64)).expect("nonzero"), &space);
    let mut last = f64::MAX;
    let mut monotone = true;
    for r in [0.99, 0.999, 0.99999] {
        let a = annihilator(&QParam::new(cplx(r)).expect("nonzero"), &space);
        let dev = scaled_residual(a.matrix(), bos.matrix(), d);
        monotone &= dev < last;
        last = dev;
    }
    let mut c = RelationCheck::new("a_q -> a_1 entrywise as q -> 1", "limit", last, 1e-2);
    c.pass = monotone && last < 1e-2;
    checks.push(c);

    let mut report = SuiteReport::new("limits", d, tol, checks);
    report.summary = Some("q -> 0 and q -> ±1 limits".into());
    report
}

/// (q, q̄) sector: partner closure for the named inputs, the closed-form
/// prefactor on non-solution pairs, the mapping variants and the breaking.
pub fn run_qqbar(config: &RunConfig) -> Vec<SuiteReport> {
    let space = config.space();
    let tol = config.tolerance;
    let mut checks = Vec::new();

    // closure over solver output for the named inputs
    let named = [
        ("q = 1", QParam::from_polar(1.0f64, 0.0).expect("nonzero")),
        (
            "q = e^{i pi/4}",
            QParam::from_polar(1.0, std::f64::consts::FRAC_PI_4).expect("nonzero"),
        ),
        (
            "q = (1/2) e^{i 9pi/5}",
            QParam::from_polar(0.5, 9.0 * std::f64::consts::PI / 5.0).expect("nonzero"),
        ),
        ("q = e^{i 0.9}", QParam::from_polar(1.0, 0.9).expect("nonzero")),
    ];
    for (label, q) in named {
        for sol in solve_partners(&q) {
            let model = build_model_qqbar(&q, &sol.qbar, &space);
            let (_, sym) = commutator_h2(&model);
            if sol.degree_exact {
                checks.push(RelationCheck::new(
                    &format!("closure [q2, h2]_G = 0, {label}, p = {}", sol.p),
                    "phas",
                    sym.residual_vs_zero,
                    tol,
                ));
            } else {
                // interval-rule entry beyond the degree-equation branch: the
                // bracket is provably nonzero and must match the closed form
                let mut c = RelationCheck::new(
                    &format!(
                        "non-closure flagged, {label}, p = {} (degree eq. unsatisfied)",
                        sol.p
                    ),
                    "phas",
                    sym.residual_vs_closed_form,
                    tol,
                );
                c.pass = c.pass && sym.residual_vs_zero > 1e-3;
                c.note = Some(format!(
                    "phase formula admits this p although pπ < φ; bracket is \
                     nonzero (scaled norm {:.3e}) and matches the closed form",
                    sym.residual_vs_zero
                ));
                checks.push(c);
            }
        }
    }

    // ten deterministic non-solution pairs: closed-form match, nonzero bracket
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut produced = 0usize;
    while produced < 10 {
        let phi_q: f64 = rng.random_range(0.05..std::f64::consts::TAU - 0.05);
        let phi_b: f64 = rng.random_range(0.05..std::f64::consts::TAU - 0.05);
        let q = QParam::from_polar(1.0, phi_q).expect("nonzero");
        let qb = QParam::from_polar(1.0, phi_b).expect("nonzero");
        let dsq = ((phi_q / std::f64::consts::PI).sqrt() + (phi_b / std::f64::consts::PI).sqrt())
            .powi(2);
        if (dsq - dsq.round()).abs() < 0.05 {
            continue; // too close to an actual solution
        }
        produced += 1;
        let model = build_model_qqbar(&q, &qb, &space);
        let (_, sym) = commutator_h2(&model);
        let mut c = RelationCheck::new(
            &format!("non-solution pair {produced}: bracket matches closed form"),
            "phas",
            sym.residual_vs_closed_form,
            tol,
        );
        c.pass = c.pass && sym.residual_vs_zero > 1e-3;
        checks.push(c);
    }

    let mut closure = SuiteReport::new("qqbar-closure", config.dim, tol, checks);
    closure.summary =
        Some("partner closure and closed-form prefactor of the diagonal charge".into());

    // mapping variants at the (1, -1) point and at a generic solver pair
    let one = QParam::from_polar(1.0f64, 0.0).expect("nonzero");
    let minus = QParam::from_polar(1.0, std::f64::consts::PI).expect("nonzero");
    let mut mapping_11 = verify_mapping_qqbar(&build_model_1m1_pair(&one, &minus, &space), tol);
    mapping_11.suite = "qqbar-mapping-(1,-1)".into();

    let q = QParam::from_polar(1.0f64, 0.9).expect("nonzero");
    let sols = solve_partners(&q);
    let generic = sols
        .iter()
        .find(|s| !s.trivial && s.degree_exact)
        .expect("generic phase has nontrivial partners");
    let generic_model = build_model_qqbar(&q, &generic.qbar, &space);
    let mapping_gen = verify_mapping_qqbar(&generic_model, tol);
    let breaking = verify_breaking_qqbar(&generic_model, tol);

    vec![closure, mapping_11, mapping_gen, breaking]
}

fn build_model_1m1_pair(
    one: &QParam<f64>,
    minus: &QParam<f64>,
    space: &FockSpace,
) -> crate::susy::SusyModel<f64> {
    build_model_qqbar(one, minus, space)
}

/// Oracle sweep: random single-parameter words, normal ordering against
/// direct evaluation.
pub fn run_oracle(config: &RunConfig) -> SuiteReport {
    run_oracle_sized(config, 200, 6, 5)
}

/// Oracle sweep with explicit word count, length bound and parameters per
/// word.
pub fn run_oracle_sized(
    config: &RunConfig,
    words: usize,
    max_len: usize,
    qs_per_word: usize,
) -> SuiteReport {
    let space = config.space();
    let tol = config.tolerance;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut worst = 0.0f64;
    let mut count = 0usize;
    for _ in 0..words {
        let len = rng.random_range(1..=max_len);
        let gens: Vec<Generator> = (0..len)
            .map(|_| {
                if rng.random_bool(0.5) {
                    Generator::A
                } else {
                    Generator::ANat
                }
            })
            .collect();
        for _ in 0..qs_per_word {
            let r: f64 = rng.random_range(0.1..=1.0);
            let phi: f64 = rng.random_range(0.0..std::f64::consts::TAU);
            let q = QParam::from_polar(r, phi).expect("nonzero");
            let word = Word::new(
                gens.iter()
                    .map(|&gen| Factor {
                        gen,
                        q,
                        exponent: 1,
                    })
                    .collect(),
            );
            let direct = word.evaluate(&space);
            let nf = normal_order_bounded(&word, max_len).expect("single parameter");
            let rebuilt = nf.evaluate(&space);
            let window = direct.safe_rows().min(rebuilt.safe_rows());
            worst = worst.max(scaled_residual(direct.matrix(), rebuilt.matrix(), window));
            count += 1;
        }
    }
    let checks = vec![RelationCheck::new(
        &format!("normal ordering matches direct evaluation over {count} word instances"),
        "oracle",
        worst,
        tol,
    )];
    let mut report = SuiteReport::new("oracle", config.dim, tol, checks);
    report.summary = Some("exact rewriter against dense evaluation".into());
    report
}

/// Figure-reproduction checks for the partner solver.
pub fn run_figures(config: &RunConfig) -> (SuiteReport, Vec<PartnerSet>) {
    let tol = config.tolerance;
    let pi = std::f64::consts::PI;
    let mut checks = Vec::new();
    let mut sets = Vec::new();

    // unit-circle input with two nontrivial partners
    let q = QParam::from_polar(1.0f64, pi / 4.0).expect("nonzero");
    let sols = solve_partners(&q);
    sets.push(PartnerSet::new(&q, &sols));
    let nontrivial: Vec<_> = sols.iter().filter(|s| !s.trivial).collect();
    let mut c = RelationCheck::new(
        "q = e^{i pi/4}: two nontrivial partners",
        "fig1",
        (nontrivial.len() as f64 - 2.0).abs(),
        0.5,
    );
    c.pass = nontrivial.len() == 2;
    checks.push(c);
    let k2 = pi * (2f64.sqrt() - 0.5).powi(2);
    let k3 = pi * (3f64.sqrt() - 0.5).powi(2);
    if nontrivial.len() == 2 {
        checks.push(RelationCheck::new(
            "partner phases pi(sqrt2 - 1/2)^2, pi(sqrt3 - 1/2)^2",
            "fig1",
            (nontrivial[0].k_value - k2)
                .abs()
                .max((nontrivial[1].k_value - k3).abs()),
            tol,
        ));
    }

    // inside-disc input with seven partners of modulus two
    let q = QParam::from_polar(0.5f64, 9.0 * pi / 5.0).expect("nonzero");
    let sols = solve_partners(&q);
    sets.push(PartnerSet::new(&q, &sols));
    let mut c = RelationCheck::new(
        "q = (1/2)e^{i 9pi/5}: seven partners of modulus 2",
        "fig2",
        (sols.len() as f64 - 7.0).abs(),
        0.5,
    );
    c.pass = sols.len() == 7 && sols.iter().all(|s| s.qbar.r() == 2.0);
    checks.push(c);
    let mut worst = 0.0f64;
    for (i, s) in sols.iter().enumerate() {
        let p = (i + 1) as f64;
        worst = worst.max((s.k_value - pi * (p.sqrt() - 1.8f64.sqrt()).powi(2)).abs());
    }
    checks.push(RelationCheck::new(
        "partner phases pi(sqrt p - sqrt(9/5))^2, p = 1..7",
        "fig2",
        worst,
        tol,
    ));

    // bosonic input: unique nontrivial partner at phase π
    let q = QParam::from_polar(1.0f64, 0.0).expect("nonzero");
    let sols = solve_partners(&q);
    sets.push(PartnerSet::new(&q, &sols));
    let nontrivial: Vec<_> = sols.iter().filter(|s| !s.trivial).collect();
    let mut c = RelationCheck::new(
        "q = 1: unique nontrivial partner e^{i pi}",
        "k+",
        if nontrivial.len() == 1 {
            (nontrivial[0].k_value - pi).abs()
        } else {
            f64::INFINITY
        },
        tol,
    );
    c.pass = nontrivial.len() == 1 && (nontrivial[0].k_value - pi).abs() <= tol;
    checks.push(c);

    let mut report = SuiteReport::new("figures", config.dim, tol, checks);
    report.summary = Some("partner sets behind the two construction figures".into());
    (report, sets)
}

/// Even/odd block-layout checks for the boson and fermion matrices.
pub fn run_blocks(config: &RunConfig) -> SuiteReport {
    let space = config.space();
    let d = config.dim;
    let tol = config.tolerance;
    let one = QParam::new(cplx(1.0f64)).expect("nonzero");
    let minus = QParam::new(cplx(-1.0f64)).expect("nonzero");
    let n_even = d.div_ceil(2);

    let (r1, b1) = reorder_even_odd(&annihilator(&one, &space), &space);
    let mut expected = Array2::<Complex<f64>>::zeros((d, d));
    for j in 0..d / 2 {
        // top-right block: odd-state amplitudes 1, √3, √5, …
        expected[[j, n_even + j]] = cplx((2.0 * j as f64 + 1.0).sqrt());
    }
    for j in 0..(d - 1) / 2 {
        // bottom-left block: even-state amplitudes √2, √4, √6, …
        expected[[n_even + j, j + 1]] = cplx((2.0 * j as f64 + 2.0).sqrt());
    }
    let res = scaled_residual(r1.matrix(), &expected, d);
    let mut c = RelationCheck::new("reordered a(1) matches the block pattern", "mat", res, 0.0);
    c.pass = res == 0.0 && b1.is_odd();
    let mut checks = vec![c];

    let (rm, bm) = reorder_even_odd(&annihilator(&minus, &space), &space);
    let mut expected = Array2::<Complex<f64>>::zeros((d, d));
    for j in 0..d / 2 {
        expected[[j, n_even + j]] = cplx(1.0);
    }
    let res = scaled_residual(rm.matrix(), &expected, d);
    let mut c = RelationCheck::new(
        "reordered a(-1) is the identity-like top-right block",
        "mat",
        res,
        0.0,
    );
    c.pass = res == 0.0 && bm.even_odd && !bm.odd_even && !bm.even_even && !bm.odd_odd;
    checks.push(c);

    // products of odd matrices are even
    let one_a = annihilator(&one, &space);
    let (_, bn) = reorder_even_odd(&one_a.adjoint().mul(&one_a).expect("same space"), &space);
    let mut c = RelationCheck::new("a(1)+ a(1) is an even element", "mat", 0.0, tol);
    c.pass = bn.is_even();
    checks.push(c);

    let mut report = SuiteReport::new("blocks", d, tol, checks);
    report.summary = Some("even/odd block structure of the generator matrices".into());
    report
}

/// The one-shot report: every suite plus figure reproduction, keyed by
/// relation tags.
#[derive(Clone, Debug, Serialize)]
pub struct ReportDocument {
    pub dim: usize,
    pub tolerance: f64,
    pub seed: u64,
    pub passed: bool,
    /// Per-tag rollup over every check in every suite.
    pub tags: std::collections::BTreeMap<String, TagSummary>,
    pub suites: Vec<SuiteReport>,
    pub figures: Vec<PartnerSet>,
}

/// Worst residual and overall pass over all checks sharing one tag.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct TagSummary {
    pub pass: bool,
    pub worst_residual: f64,
    pub checks: usize,
}

impl ReportDocument {
    pub fn render_text(&self) -> String {
        let mut out = format!(
            "verification report (dim {}, tol {:.1e}, seed {}): {}\n\n",
            self.dim,
            self.tolerance,
            self.seed,
            if self.passed { "PASS" } else { "FAIL" }
        );
        for s in &self.suites {
            out.push_str(&s.render_text());
            out.push('\n');
        }
        out
    }
}

/// Runs every suite plus the figure and block reproductions.
pub fn run_report(config: &RunConfig) -> Result<ReportDocument> {
    let mut suites = run_suite("all", config)?;
    let (figures_suite, figure_sets) = run_figures(config);
    suites.push(figures_suite);
    suites.push(run_blocks(config));
    let passed = suites.iter().all(|s| s.passed);
    let mut tags: std::collections::BTreeMap<String, TagSummary> = Default::default();
    for check in suites.iter().flat_map(|s| s.checks.iter()) {
        let entry = tags.entry(check.tag.clone()).or_insert(TagSummary {
            pass: true,
            worst_residual: 0.0,
            checks: 0,
        });
        entry.pass &= check.pass;
        entry.worst_residual = entry.worst_residual.max(check.residual);
        entry.checks += 1;
    }
    Ok(ReportDocument {
        dim: config.dim,
        tolerance: config.tolerance,
        seed: config.seed,
        passed,
        tags,
        suites,
        figures: figure_sets,
    })
}
