//! Enumeration of admissible partner parameters.
//!
//! Given `q = r·e^{iφ}`, the quadratic charge `a_q^♮ a_{q̄}` is a symmetry of
//! its squared Hamiltonian exactly when the shared degree `d` satisfies
//! `d² = p ∈ ℕ` and the radius product `r_q·r_{q̄}` is one. Solving for the
//! partner phase gives
//!
//! ```text
//! k_p(φ) = (√(pπ) − √φ)²  ∈ [0, 2π),      r_{q̄} = 1/r_q,
//! ```
//!
//! enumerated here over `p ≥ 1` (plus `p = 0` exactly when `φ = 0`). The
//! formula is a genuine solution of the degree equation only when `pπ ≥ φ`;
//! each emitted solution records whether the degree equation holds
//! ([`PartnerSolution::degree_exact`]), since phases beyond `pπ` still
//! satisfy the interval constraint while failing the degree equation.

use std::io::Write;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::param::{QParam, TAG_TOL};
use crate::scalar::{from_f64, Real};

/// Strict upper comparison tolerance for the half-open phase interval.
pub const BOUNDARY_TOL: f64 = 1e-12;

/// One admissible partner parameter `q̄_p`.
#[derive(Clone, Copy, Debug)]
pub struct PartnerSolution<T: Real> {
    /// Index of the degree constraint `d² = p`.
    pub p: u32,
    /// The partner parameter, modulus `1/r_q`, phase `k_p`.
    pub qbar: QParam<T>,
    /// Partner phase in `[0, 2π)`.
    pub k_value: T,
    /// Whether `q̄ = q` (present exactly when `p = (4/π)·φ_q` on the circle).
    pub trivial: bool,
    /// Whether `(√(φ/π) + √(k/π))² = p` holds to 1e−9; false on the branch
    /// where `pπ < φ` and the interval rule admits a non-solution.
    pub degree_exact: bool,
    /// Whether the phase was accepted beyond `[0, 2π)` (extended mode only).
    pub extended: bool,
}

/// Enumerates partner parameters with phases in `[0, 2π)`.
///
/// Returns, in increasing `p`, every `p ≥ 1` with
/// `k_p = (√(pπ) − √φ)² ∈ [0, 2π)`, plus the `p = 0` solution exactly when
/// `φ = 0`. Boundary hits within [`BOUNDARY_TOL`] of `2π` are excluded and
/// logged. The list always holds between 2 and 7 entries.
pub fn solve_partners<T: Real>(q: &QParam<T>) -> Vec<PartnerSolution<T>> {
    solve_with_phase_bound(q, T::TAU())
}

/// Enumerates partner phases up to `k < phase_bound`, flagging entries with
/// `k ≥ 2π` as extended. Exploratory mode for the relaxed interval rule.
pub fn solve_partners_extended<T: Real>(q: &QParam<T>, phase_bound: T) -> Vec<PartnerSolution<T>> {
    solve_with_phase_bound(q, phase_bound.max(T::TAU()))
}

fn solve_with_phase_bound<T: Real>(q: &QParam<T>, bound: T) -> Vec<PartnerSolution<T>> {
    let phi = q.phi();
    let r_bar = T::one() / q.r();
    let boundary = from_f64::<T>(BOUNDARY_TOL);
    let mut out = Vec::new();

    let mut push = |p: u32, k: T| {
        let qbar = QParam::from_polar(r_bar, k).expect("positive modulus");
        let tol = from_f64::<T>(TAG_TOL);
        let trivial = (k - phi).abs() <= tol && (r_bar - q.r()).abs() <= tol;
        let d = (phi / T::PI()).sqrt() + (k / T::PI()).sqrt();
        let degree_exact = (d * d - from_f64::<T>(f64::from(p))).abs() <= tol;
        out.push(PartnerSolution {
            p,
            qbar,
            k_value: k,
            trivial,
            degree_exact,
            extended: k >= T::TAU(),
        });
    };

    if phi == T::zero() {
        push(0, T::zero());
    }
    let mut p = 1u32;
    loop {
        let k = ((from_f64::<T>(f64::from(p)) * T::PI()).sqrt() - phi.sqrt()).powi(2);
        if k < bound - boundary {
            push(p, k);
        } else if (k - T::TAU()).abs() <= boundary {
            log::debug!("partner p={p} excluded: phase hits the 2π boundary");
        }
        // k_p grows monotonically once √(pπ) passes √φ; nothing more to find
        let past_minimum = from_f64::<T>(f64::from(p)) * T::PI() >= phi;
        if past_minimum && k >= bound - boundary {
            break;
        }
        p += 1;
        if p > 10_000 {
            break;
        }
    }
    out
}

/// One row of the admissibility sweep.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct CountRow {
    pub phi: f64,
    pub count: usize,
}

/// Sweep of the number of admissible partners over `φ ∈ [0, 2π)`, with the
/// phase thresholds `π(√p−√2)²` past which `p ∈ {3,…,7}` becomes admissible.
#[derive(Clone, Debug, Serialize)]
pub struct CountProfile {
    pub rows: Vec<CountRow>,
    pub breakpoints: Vec<(u32, f64)>,
    pub min_count: usize,
    pub max_count: usize,
}

/// Sweeps the partner count over uniformly sampled phases on the unit circle.
pub fn partner_count_profile<T: Real>(samples: usize) -> CountProfile {
    assert!(samples >= 1);
    let mut rows = Vec::with_capacity(samples);
    let mut min_count = usize::MAX;
    let mut max_count = 0usize;
    for i in 0..samples {
        let phi = T::TAU() * from_f64::<T>(i as f64) / from_f64::<T>(samples as f64);
        let q = QParam::from_polar(T::one(), phi).expect("unit modulus");
        let count = solve_partners(&q).len();
        min_count = min_count.min(count);
        max_count = max_count.max(count);
        rows.push(CountRow {
            phi: phi.to_f64().unwrap_or(f64::NAN),
            count,
        });
    }
    let breakpoints = (3u32..=7)
        .map(|p| {
            let b = std::f64::consts::PI * ((p as f64).sqrt() - 2f64.sqrt()).powi(2);
            (p, b)
        })
        .collect();
    CountProfile {
        rows,
        breakpoints,
        min_count,
        max_count,
    }
}

/// Serializable solver output for one input parameter.
#[derive(Clone, Debug, Serialize)]
pub struct PartnerSet {
    pub input_q: PlanePoint,
    pub solutions: Vec<PartnerRow>,
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct PlanePoint {
    pub re: f64,
    pub im: f64,
    pub phase: f64,
    pub modulus: f64,
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct PartnerRow {
    pub p: u32,
    pub qbar: PlanePoint,
    pub phase: f64,
    pub modulus: f64,
    pub trivial: bool,
    pub degree_exact: bool,
    pub extended: bool,
}

impl PartnerSet {
    pub fn new<T: Real>(q: &QParam<T>, solutions: &[PartnerSolution<T>]) -> Self {
        let point = |value: num_complex::Complex<T>, r: T, phi: T| PlanePoint {
            re: value.re.to_f64().unwrap_or(f64::NAN),
            im: value.im.to_f64().unwrap_or(f64::NAN),
            phase: phi.to_f64().unwrap_or(f64::NAN),
            modulus: r.to_f64().unwrap_or(f64::NAN),
        };
        PartnerSet {
            input_q: point(q.value(), q.r(), q.phi()),
            solutions: solutions
                .iter()
                .map(|s| PartnerRow {
                    p: s.p,
                    qbar: point(s.qbar.value(), s.qbar.r(), s.qbar.phi()),
                    phase: s.k_value.to_f64().unwrap_or(f64::NAN),
                    modulus: s.qbar.r().to_f64().unwrap_or(f64::NAN),
                    trivial: s.trivial,
                    degree_exact: s.degree_exact,
                    extended: s.extended,
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn to_csv(&self) -> String {
        let mut s =
            String::from("p,re,im,phase,modulus,trivial,degree_exact,extended\n");
        for row in &self.solutions {
            s.push_str(&format!(
                "{},{},{},{},{},{},{},{}\n",
                row.p,
                row.qbar.re,
                row.qbar.im,
                row.phase,
                row.modulus,
                row.trivial,
                row.degree_exact,
                row.extended
            ));
        }
        s
    }
}

/// Output format for [`emit_figure_data`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FigureFormat {
    Json,
    Csv,
}

/// Writes the partner set for `q` to `sink` as JSON or CSV rows
/// `{p, re(q̄), im(q̄), phase, modulus, …}`, suitable for external plotting.
pub fn emit_figure_data<T: Real>(
    q: &QParam<T>,
    sink: &mut dyn Write,
    format: FigureFormat,
) -> Result<PartnerSet> {
    let solutions = solve_partners(q);
    let set = PartnerSet::new(q, &solutions);
    let payload = match format {
        FigureFormat::Json => set.to_json(),
        FigureFormat::Csv => set.to_csv(),
    };
    sink.write_all(payload.as_bytes()).map_err(Error::from)?;
    Ok(set)
}
