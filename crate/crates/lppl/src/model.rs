//! The log-periodic power-law (LPPL) model and its linearized form.
//!
//! The model value at time `t` (a decimal year strictly before the critical
//! time `t_c`) is
//!
//! ```text
//! x(t) = A - m * (t_c - t)^alpha * { 1 + C * cos[omega * ln(t_c - t) + phi] }
//! ```
//!
//! i.e. power-law growth toward a finite-time quasi-singularity at `t_c`
//! with oscillations that are periodic in `ln(t_c - t)`. Successive
//! oscillation extrema approach `t_c` geometrically with ratio
//! `exp(-pi / omega)`.

use std::f64::consts::{PI, TAU};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Convert a calendar month to a decimal year under the mid-month convention:
/// `year + (month - 0.5) / 12`. Monthly index values are aggregates over the
/// month, so the interval midpoint is the least-biased placement.
pub fn to_decimal_year(year: i32, month: u32) -> Result<f64> {
    if !(1..=12).contains(&month) {
        return Err(Error::InvalidArgument(format!(
            "month must be in 1..=12, got {month}"
        )));
    }
    Ok(f64::from(year) + (f64::from(month) - 0.5) / 12.0)
}

/// An ordered series of (decimal year, index value) observations.
///
/// Timestamps are strictly increasing and all entries are finite. A series
/// may be empty (e.g. as the result of truncation); operations that need
/// data impose their own minima.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeSeries {
    times: Vec<f64>,
    values: Vec<f64>,
}

impl TimeSeries {
    pub fn new(times: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        if times.len() != values.len() {
            return Err(Error::InvalidArgument(format!(
                "times and values differ in length: {} vs {}",
                times.len(),
                values.len()
            )));
        }
        for (i, &t) in times.iter().enumerate() {
            if !t.is_finite() {
                return Err(Error::InvalidArgument(format!(
                    "non-finite timestamp at index {i}"
                )));
            }
            if i > 0 && t <= times[i - 1] {
                return Err(Error::InvalidArgument(format!(
                    "timestamps not strictly increasing at index {i}: {} then {t}",
                    times[i - 1]
                )));
            }
        }
        if let Some(i) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::InvalidArgument(format!(
                "non-finite value at index {i}"
            )));
        }
        Ok(TimeSeries { times, values })
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn first_time(&self) -> Option<f64> {
        self.times.first().copied()
    }

    pub fn last_time(&self) -> Option<f64> {
        self.times.last().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.times.iter().copied().zip(self.values.iter().copied())
    }
}

/// The seven LPPL parameters.
///
/// Canonical form: `phi` is normalized to `[0, 2*pi)` and `C >= 0` (a
/// negative oscillation amplitude is folded into the phase). `alpha` outside
/// `(0, 1)` is representable — it is flagged by sanity checks rather than
/// rejected at construction — but `omega` must be positive and every field
/// finite.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LpplParams {
    /// Asymptotic level approached at the singularity (index points).
    pub a: f64,
    /// Power-law amplitude (index points); positive for growth toward `a` from below.
    pub m: f64,
    /// Relative oscillation amplitude (dimensionless, canonically >= 0).
    pub c: f64,
    /// Critical time (decimal year).
    pub tc: f64,
    /// Power-law exponent; a finite-value, infinite-slope singularity needs `0 < alpha < 1`.
    pub alpha: f64,
    /// Angular log-frequency (radians per unit of `ln(t_c - t)`).
    pub omega: f64,
    /// Phase in radians, normalized to `[0, 2*pi)`.
    pub phi: f64,
}

impl LpplParams {
    pub fn new(a: f64, m: f64, c: f64, tc: f64, alpha: f64, omega: f64, phi: f64) -> Result<Self> {
        for (name, v) in [
            ("A", a),
            ("m", m),
            ("C", c),
            ("t_c", tc),
            ("alpha", alpha),
            ("omega", omega),
            ("phi", phi),
        ] {
            if !v.is_finite() {
                return Err(Error::InvalidArgument(format!("{name} must be finite")));
            }
        }
        if omega <= 0.0 {
            return Err(Error::InvalidArgument(format!(
                "omega must be positive, got {omega}"
            )));
        }
        let (c, phi) = if c < 0.0 { (-c, phi + PI) } else { (c, phi) };
        Ok(LpplParams {
            a,
            m,
            c,
            tc,
            alpha,
            omega,
            phi: normalize_phase(phi),
        })
    }

    /// Evaluate the model at `t`. Errors if `t >= t_c`.
    pub fn evaluate(&self, t: f64) -> Result<f64> {
        let tau = self.tc - t;
        if !(tau > 0.0) {
            return Err(Error::Domain {
                t,
                t_c: self.tc,
                index: None,
            });
        }
        Ok(self.evaluate_unchecked_tau(tau))
    }

    /// Element-wise evaluation; errors identify the first offending index.
    pub fn evaluate_series(&self, times: &[f64]) -> Result<Vec<f64>> {
        times
            .iter()
            .enumerate()
            .map(|(i, &t)| {
                let tau = self.tc - t;
                if !(tau > 0.0) {
                    return Err(Error::Domain {
                        t,
                        t_c: self.tc,
                        index: Some(i),
                    });
                }
                Ok(self.evaluate_unchecked_tau(tau))
            })
            .collect()
    }

    #[inline]
    pub(crate) fn evaluate_unchecked_tau(&self, tau: f64) -> f64 {
        let f = tau.powf(self.alpha);
        let osc = 1.0 + self.c * (self.omega * tau.ln() + self.phi).cos();
        self.a - self.m * f * osc
    }

    /// Split into the linearized form (nonlinear triple + linear quadruple).
    pub fn split(&self) -> LinearizedParams {
        LinearizedParams {
            tc: self.tc,
            alpha: self.alpha,
            omega: self.omega,
            a: self.a,
            b: -self.m,
            c1: -self.m * self.c * self.phi.cos(),
            c2: self.m * self.c * self.phi.sin(),
        }
    }

    /// All times in `[t_from, t_to]` where the oscillation factor
    /// `cos(omega * ln(t_c - t) + phi)` attains an extremum (+/-1), in
    /// ascending order. Solved in closed form: the extrema sit at
    /// `t = t_c - exp((k*pi - phi) / omega)` for integer `k`.
    pub fn oscillation_extrema(&self, t_from: f64, t_to: f64) -> Result<Vec<f64>> {
        if !(t_from < t_to && t_to < self.tc) {
            return Err(Error::InvalidArgument(format!(
                "need t_from < t_to < t_c, got t_from={t_from}, t_to={t_to}, t_c={}",
                self.tc
            )));
        }
        // t decreases as k grows, so k_hi corresponds to t_from.
        let k_hi = (self.phi + self.omega * (self.tc - t_from).ln()) / PI;
        let k_lo = (self.phi + self.omega * (self.tc - t_to).ln()) / PI;
        let mut out = Vec::new();
        let mut k = k_hi.floor();
        while k >= k_lo.ceil() {
            let t = self.tc - ((k * PI - self.phi) / self.omega).exp();
            if t >= t_from && t <= t_to {
                out.push(t);
            }
            k -= 1.0;
        }
        Ok(out)
    }
}

/// Normalize an angle to `[0, 2*pi)`.
pub(crate) fn normalize_phase(phi: f64) -> f64 {
    let p = phi.rem_euclid(TAU);
    // rem_euclid can return exactly TAU when phi is a tiny negative number.
    if p >= TAU {
        p - TAU
    } else {
        p
    }
}

/// Exact algebraic regrouping of the model as
///
/// ```text
/// x(t) = A + B*f + C1*f*cos(omega*ln(t_c - t)) + C2*f*sin(omega*ln(t_c - t)),
/// f = (t_c - t)^alpha
/// ```
///
/// with `B = -m`, `C1 = -m*C*cos(phi)`, `C2 = m*C*sin(phi)`. The quadruple
/// `(A, B, C1, C2)` enters linearly, which is what lets the fit slave it to
/// the nonlinear triple `(t_c, alpha, omega)` by least squares.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LinearizedParams {
    pub tc: f64,
    pub alpha: f64,
    pub omega: f64,
    pub a: f64,
    pub b: f64,
    pub c1: f64,
    pub c2: f64,
}

impl LinearizedParams {
    /// Recover the canonical seven-parameter form. Total: when `b == 0` the
    /// oscillation amplitude is unrepresentable and collapses to `C = 0`,
    /// `phi = 0`.
    pub fn compose(&self) -> LpplParams {
        let m = -self.b;
        let (c, phi) = if m == 0.0 {
            (0.0, 0.0)
        } else {
            let r = self.c1.hypot(self.c2);
            if r == 0.0 {
                (0.0, 0.0)
            } else {
                (r / m.abs(), (self.c2 / m).atan2(-self.c1 / m))
            }
        };
        let (c, phi) = if c < 0.0 { (-c, phi + PI) } else { (c, phi) };
        LpplParams {
            a: self.a,
            m,
            c,
            tc: self.tc,
            alpha: self.alpha,
            omega: self.omega,
            phi: normalize_phase(phi),
        }
    }

    /// Evaluate the linear form at `t` (same value as the composed model up
    /// to floating-point reassociation).
    pub fn evaluate(&self, t: f64) -> Result<f64> {
        let tau = self.tc - t;
        if !(tau > 0.0) {
            return Err(Error::Domain {
                t,
                t_c: self.tc,
                index: None,
            });
        }
        let f = tau.powf(self.alpha);
        let theta = self.omega * tau.ln();
        Ok(self.a + self.b * f + self.c1 * f * theta.cos() + self.c2 * f * theta.sin())
    }
}
