//! Laser pulse definition and analytic complex-time field evaluations.
//!
//! The vector potential is A(t) = A₀ cos²(πt/τ) sin(ωt + φ) on t ∈ [−τ/2, τ/2]
//! and zero outside. Internally the cos² envelope is expanded exactly into
//! three sinusoids,
//!
//!   A(t) = (A₀/2) sin(ωt+φ) + (A₀/4) sin((ω+2Ω)t+φ) + (A₀/4) sin((ω−2Ω)t+φ),
//!
//! with Ω = π/τ, so that A, E = −∂A/∂t, the excursion ΔG = ∫A dτ and ∫A² dτ
//! all have closed forms valid at complex time. Complex-time calls with Re(t)
//! outside the pulse window are rejected: the analytic continuation of the
//! envelope has no meaning beyond the pulse.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::{FtError, Result};

/// Atomic unit of intensity, W/cm².
pub const INTENSITY_AU: f64 = 3.50945e16;
/// Speed of light in atomic units.
pub const C_AU: f64 = 137.035999084;
/// One nanometre in Bohr radii.
pub const NM_AU: f64 = 18.897261246257702;

/// Relative slack on the domain check, so endpoint evaluations survive
/// roundoff in callers that compute t_f arithmetically.
const DOMAIN_SLACK: f64 = 1e-9;

/// Fractional frequency below which a sinusoid component is treated as
/// constant (only reachable for a single-cycle pulse, where ω − 2Ω = 0).
const DEGENERATE_FREQ: f64 = 1e-12;

/// cos²-envelope laser pulse in atomic units.
///
/// `t_i = −τ/2`, `t_f = +τ/2`; the envelope vanishes identically at both
/// edges. For the scans in this crate τ is an integer number of optical
/// cycles, but any τ > 0 is accepted.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct PulseParams {
    /// Vector-potential amplitude A₀ (a.u.).
    pub a0: f64,
    /// Carrier angular frequency ω (a.u.).
    pub omega: f64,
    /// Total pulse duration τ (a.u.).
    pub tau: f64,
    /// Carrier–envelope phase φ (rad).
    pub cep: f64,
}

impl PulseParams {
    pub fn new(a0: f64, omega: f64, tau: f64, cep: f64) -> Result<Self> {
        if !(a0 > 0.0) || !(omega > 0.0) || !(tau > 0.0) {
            return Err(FtError::InvalidArgument(format!(
                "pulse parameters must be positive: a0={a0}, omega={omega}, tau={tau}"
            )));
        }
        Ok(Self { a0, omega, tau, cep })
    }

    /// Pulse with duration given in optical cycles of the carrier.
    pub fn with_cycles(a0: f64, omega: f64, cycles: f64, cep: f64) -> Result<Self> {
        let period = 2.0 * std::f64::consts::PI / omega;
        Self::new(a0, omega, cycles * period, cep)
    }

    /// Start of the pulse, −τ/2.
    pub fn t_start(&self) -> f64 {
        -0.5 * self.tau
    }

    /// End of the pulse, +τ/2.
    pub fn t_end(&self) -> f64 {
        0.5 * self.tau
    }

    /// Optical period T = 2π/ω.
    pub fn period(&self) -> f64 {
        2.0 * std::f64::consts::PI / self.omega
    }

    /// The three (amplitude, frequency) sinusoid components of A.
    fn components(&self) -> [(f64, f64); 3] {
        let cap_omega = std::f64::consts::PI / self.tau;
        [
            (0.5 * self.a0, self.omega),
            (0.25 * self.a0, self.omega + 2.0 * cap_omega),
            (0.25 * self.a0, self.omega - 2.0 * cap_omega),
        ]
    }

    fn check_domain(&self, t: Complex64) -> Result<()> {
        let slack = DOMAIN_SLACK * self.tau;
        if t.re < self.t_start() - slack || t.re > self.t_end() + slack {
            return Err(FtError::Domain {
                re_t: t.re,
                t_i: self.t_start(),
                t_f: self.t_end(),
            });
        }
        Ok(())
    }
}

/// Analytic continuation of the vector potential A(t) at complex time.
pub fn vector_potential(p: &PulseParams, t: Complex64) -> Result<Complex64> {
    p.check_domain(t)?;
    let mut a = Complex64::new(0.0, 0.0);
    for (amp, w) in p.components() {
        if w.abs() < DEGENERATE_FREQ * p.omega {
            a += amp * p.cep.sin();
        } else {
            a += amp * (w * t + p.cep).sin();
        }
    }
    Ok(a)
}

/// Electric field E(t) = −∂A/∂t, analytic at complex time.
pub fn electric_field(p: &PulseParams, t: Complex64) -> Result<Complex64> {
    p.check_domain(t)?;
    let mut e = Complex64::new(0.0, 0.0);
    for (amp, w) in p.components() {
        if w.abs() < DEGENERATE_FREQ * p.omega {
            continue;
        }
        e -= amp * w * (w * t + p.cep).cos();
    }
    Ok(e)
}

/// d E / d t at real time; used by the peak finder.
fn field_slope(p: &PulseParams, t: f64) -> f64 {
    let mut d = 0.0;
    for (amp, w) in p.components() {
        if w.abs() < DEGENERATE_FREQ * p.omega {
            continue;
        }
        d += amp * w * w * (w * t + p.cep).sin();
    }
    d
}

/// Antiderivative of A; excursion is a difference of endpoint values.
fn anti_a(p: &PulseParams, t: Complex64) -> Complex64 {
    let mut g = Complex64::new(0.0, 0.0);
    for (amp, w) in p.components() {
        if w.abs() < DEGENERATE_FREQ * p.omega {
            g += amp * p.cep.sin() * t;
        } else {
            g -= amp / w * (w * t + p.cep).cos();
        }
    }
    g
}

/// Excursion ΔG(t_upper, t_lower) = ∫ A dτ between complex endpoints.
///
/// This is the field-driven displacement of a free electron; ΔG(t_f, 0) of
/// the two-cycle pulse sets the recapture geometry of the whole model.
pub fn excursion(p: &PulseParams, t_upper: Complex64, t_lower: Complex64) -> Result<Complex64> {
    p.check_domain(t_upper)?;
    p.check_domain(t_lower)?;
    Ok(anti_a(p, t_upper) - anti_a(p, t_lower))
}

/// Antiderivative of A²; product-to-sum expansion of the three-sinusoid form.
fn anti_a2(p: &PulseParams, t: Complex64) -> Complex64 {
    let comps = p.components();
    let mut g = Complex64::new(0.0, 0.0);
    let two_cep = 2.0 * p.cep;
    for (ai, wi) in comps {
        for (aj, wj) in comps {
            let pref = 0.5 * ai * aj;
            let dw = wi - wj;
            let sw = wi + wj;
            // ∫ sin(wi τ+φ) sin(wj τ+φ) dτ
            //   = ½[∫cos(dw τ) dτ − ∫cos(sw τ+2φ) dτ]
            let i1 = if dw.abs() < DEGENERATE_FREQ * p.omega {
                t
            } else {
                (dw * t).sin() / dw
            };
            let i2 = if sw.abs() < DEGENERATE_FREQ * p.omega {
                two_cep.cos() * t
            } else {
                (sw * t + two_cep).sin() / sw
            };
            g += pref * (i1 - i2);
        }
    }
    g
}

/// ∫ A² dτ between complex endpoints; enters the SFA action.
pub fn excursion_sq(p: &PulseParams, t_upper: Complex64, t_lower: Complex64) -> Result<Complex64> {
    p.check_domain(t_upper)?;
    p.check_domain(t_lower)?;
    Ok(anti_a2(p, t_upper) - anti_a2(p, t_lower))
}

/// Real times of the electric-field extrema in (t_i, t_f).
///
/// All roots of dE/dt are located by bisection on a dense grid; extrema with
/// |E| below `1%` of the global maximum are dropped so that envelope-edge
/// wiggles do not seed the saddle solver.
pub fn field_peaks(p: &PulseParams) -> Vec<f64> {
    const GRID: usize = 8192;
    const THRESHOLD: f64 = 0.01;

    let (ti, tf) = (p.t_start(), p.t_end());
    let h = (tf - ti) / GRID as f64;
    let slope: Vec<f64> = (0..=GRID).map(|k| field_slope(p, ti + k as f64 * h)).collect();
    let e_at = |t: f64| electric_field(p, Complex64::new(t, 0.0)).expect("real t in domain").re;

    let e_max = (0..=GRID)
        .map(|k| e_at(ti + k as f64 * h).abs())
        .fold(0.0_f64, f64::max);

    let mut peaks = Vec::new();
    let mut push = |t: f64| {
        if t > ti && t < tf && e_at(t).abs() > THRESHOLD * e_max {
            peaks.push(t);
        }
    };

    for k in 0..GRID {
        let (t0, t1) = (ti + k as f64 * h, ti + (k + 1) as f64 * h);
        if slope[k] == 0.0 {
            push(t0);
            continue;
        }
        if slope[k] * slope[k + 1] < 0.0 {
            let (mut a, mut b, mut da) = (t0, t1, slope[k]);
            for _ in 0..60 {
                let m = 0.5 * (a + b);
                let dm = field_slope(p, m);
                if da * dm <= 0.0 {
                    b = m;
                } else {
                    a = m;
                    da = dm;
                }
            }
            push(0.5 * (a + b));
        }
    }
    if slope[GRID] == 0.0 {
        // endpoint root is outside the open interval; kept for completeness
        // of the scan but rejected by `push`'s (ti, tf) bound.
        push(tf);
    }
    peaks
}

/// Field amplitude from peak intensity, plus the derived pulse quantities.
///
/// E₀ = √(I / 3.50945·10¹⁶) a.u., A₀ = E₀/ω with ω fixed by the wavelength.
pub fn a0_from_intensity(intensity_wcm2: f64, wavelength_nm: f64) -> (f64, f64) {
    let omega = 2.0 * std::f64::consts::PI * C_AU / (wavelength_nm * NM_AU);
    let e0 = (intensity_wcm2 / INTENSITY_AU).sqrt();
    (e0 / omega, omega)
}

/// Keldysh parameter γ = ω √(2 I_p) / E₀; γ < 1 marks the tunneling regime.
pub fn keldysh(intensity_wcm2: f64, wavelength_nm: f64, ip: f64) -> f64 {
    let (a0, omega) = a0_from_intensity(intensity_wcm2, wavelength_nm);
    let e0 = a0 * omega;
    omega * (2.0 * ip).sqrt() / e0
}
