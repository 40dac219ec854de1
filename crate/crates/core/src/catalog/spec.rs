//! Declarative solution definitions as read from run configurations.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{AnalyticSolution, Mode};
use crate::minkowski::{dual_array, MetricConvention};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SolutionKind {
    LinearPlaneWave,
    CircularPlaneWave,
    Superposition,
    StandingWave,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Gauge {
    /// `A_0 = 0` (the transverse waves are then also in Lorenz gauge)
    #[default]
    Temporal,
    /// temporal gauge plus a null pure-gauge term, so `A_0 != 0` while
    /// `d^a A_a = 0` still holds
    Lorenz,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PolarizationKind {
    #[default]
    Linear,
    Circular,
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpecError {
    #[error("solution `{name}`: {msg}")]
    Invalid { name: String, msg: String },
}

fn d_amplitude() -> f64 {
    1.0
}
fn d_omega() -> f64 {
    1.0
}
fn d_direction() -> [f64; 3] {
    [0.0, 0.0, 1.0]
}
fn d_polarization() -> [f64; 3] {
    [1.0, 0.0, 0.0]
}
fn d_helicity() -> i8 {
    1
}

/// One solution entry. Every field except `kind` has a default: unit
/// amplitude and frequency, propagation along `z`, polarization along `x`,
/// positive helicity, temporal gauge.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
pub struct SolutionSpec {
    #[serde(default)]
    pub name: String,
    pub kind: SolutionKind,
    /// amplitude of the vector potential
    #[serde(default = "d_amplitude")]
    pub amplitude: f64,
    #[serde(default = "d_omega")]
    pub omega: f64,
    /// propagation direction, normalized on build
    #[serde(default = "d_direction")]
    pub direction: [f64; 3],
    /// must be orthogonal to `direction`; normalized on build
    #[serde(default = "d_polarization")]
    pub polarization: [f64; 3],
    /// `+1` or `-1`
    #[serde(default = "d_helicity")]
    pub helicity: i8,
    #[serde(default)]
    pub gauge: Gauge,
    /// polarization of the two counter-propagating waves of a standing wave
    #[serde(default)]
    pub polarization_kind: PolarizationKind,
    /// parts of a superposition
    #[serde(default)]
    pub components: Vec<SolutionSpec>,
}

impl SolutionSpec {
    pub fn new(kind: SolutionKind) -> Self {
        Self {
            name: String::new(),
            kind,
            amplitude: 1.0,
            omega: 1.0,
            direction: d_direction(),
            polarization: d_polarization(),
            helicity: 1,
            gauge: Gauge::Temporal,
            polarization_kind: PolarizationKind::Linear,
            components: Vec::new(),
        }
    }

    pub fn linear() -> Self {
        Self::new(SolutionKind::LinearPlaneWave)
    }

    pub fn circular(helicity: i8) -> Self {
        Self {
            helicity,
            ..Self::new(SolutionKind::CircularPlaneWave)
        }
    }

    pub fn with_direction(mut self, direction: [f64; 3], polarization: [f64; 3]) -> Self {
        self.direction = direction;
        self.polarization = polarization;
        self
    }

    pub fn with_gauge(mut self, gauge: Gauge) -> Self {
        self.gauge = gauge;
        self
    }

    pub fn with_amplitude(mut self, amplitude: f64) -> Self {
        self.amplitude = amplitude;
        self
    }

    fn err(&self, msg: impl Into<String>) -> SpecError {
        SpecError::Invalid {
            name: if self.name.is_empty() { format!("{:?}", self.kind) } else { self.name.clone() },
            msg: msg.into(),
        }
    }

    pub fn build(&self, conv: &MetricConvention) -> Result<AnalyticSolution, SpecError> {
        if self.kind == SolutionKind::Superposition {
            if self.components.is_empty() {
                return Err(self.err("a superposition needs at least one component"));
            }
            let mut parts = self.components.iter().map(|c| c.build(conv));
            let mut acc = parts.next().expect("nonempty")?;
            for p in parts {
                acc = acc.superpose(&p?);
            }
            return Ok(acc);
        }
        if !self.components.is_empty() {
            return Err(self.err("only a superposition takes components"));
        }
        if !self.amplitude.is_finite() {
            return Err(self.err("amplitude must be finite"));
        }
        if !(self.omega.is_finite() && self.omega > 0.0) {
            return Err(self.err(format!("omega must be positive, got {}", self.omega)));
        }
        if self.helicity.abs() != 1 {
            return Err(self.err(format!("helicity must be +1 or -1, got {}", self.helicity)));
        }
        let n = normalized(self.direction).ok_or_else(|| self.err("direction is zero"))?;
        let e1 = normalized(self.polarization).ok_or_else(|| self.err("polarization is zero"))?;
        if dot(n, e1).abs() > 1e-9 {
            return Err(self.err("polarization is not orthogonal to the propagation direction"));
        }
        let circular = match self.kind {
            SolutionKind::CircularPlaneWave => true,
            SolutionKind::LinearPlaneWave => false,
            _ => self.polarization_kind == PolarizationKind::Circular,
        };
        let sigma = self.helicity as f64;
        let wave = |n: [f64; 3]| {
            let e2 = cross(n, e1);
            let sin_part = if circular { e2.map(|x| sigma * x) } else { [0.0; 3] };
            plane_mode(conv, self.omega, n, e1, sin_part, self.amplitude, self.gauge)
        };
        let mut modes = vec![wave(n)];
        if self.kind == SolutionKind::StandingWave {
            modes.push(wave(n.map(|x| -x)));
        }
        Ok(AnalyticSolution {
            conv: *conv,
            modes,
            omega: self.omega,
        })
    }
}

fn dot(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

fn normalized(v: [f64; 3]) -> Option<[f64; 3]> {
    let l = dot(v, v).sqrt();
    (l > 0.0 && l.is_finite()).then(|| v.map(|x| x / l))
}

/// Vector potential `a (e_cos cos(phi) + e_sin sin(phi))` in three-vector
/// form, with its magnetic partner chosen so that `G = *F` holds exactly.
fn plane_mode(
    conv: &MetricConvention,
    omega: f64,
    n: [f64; 3],
    e_cos: [f64; 3],
    e_sin: [f64; 3],
    amplitude: f64,
    gauge: Gauge,
) -> Mode {
    let s = conv.g(0) as f64;
    let p = [omega, -omega * n[0], -omega * n[1], -omega * n[2]];
    // covariant A_i = -s A^i for a spatial three-vector A^i
    let covariant = |e: [f64; 3]| [0.0, -s * amplitude * e[0], -s * amplitude * e[1], -s * amplitude * e[2]];
    // eta_b = (*(p ^ eps))_0b / omega has eta_0 = 0 and p ^ eta = *(p ^ eps)
    let partner = |eps: [f64; 4]| -> [f64; 4] {
        let wedge: [[f64; 4]; 4] = std::array::from_fn(|a| std::array::from_fn(|b| p[a] * eps[b] - p[b] * eps[a]));
        let dual = dual_array(&wedge, conv);
        std::array::from_fn(|b| dual[0][b] / omega)
    };
    let (a_cos, a_sin) = (covariant(e_cos), covariant(e_sin));
    let (mut c_cos, c_sin) = (partner(a_cos), partner(a_sin));
    let mut a_cos = a_cos;
    if gauge == Gauge::Lorenz {
        let beta = 0.5 * amplitude / omega;
        for i in 0..4 {
            a_cos[i] += beta * p[i];
            c_cos[i] += beta * p[i];
        }
    }
    Mode {
        p,
        a_cos,
        a_sin,
        c_cos,
        c_sin,
    }
}
