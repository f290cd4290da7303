use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Coupling,
    Variances,
    NormalForm,
    State,
    Wigner,
    Verify,
    Baseline,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Coupling => "coupling",
            Command::Variances => "variances",
            Command::NormalForm => "normal-form",
            Command::State => "state",
            Command::Wigner => "wigner",
            Command::Verify => "verify",
            Command::Baseline => "baseline",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Quadrature {
    Q,
    P,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Axis {
    pub quadrature: Quadrature,
    /// 0-based mode index
    pub mode: usize,
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.quadrature {
            Quadrature::Q => 'q',
            Quadrature::P => 'p',
        };
        write!(f, "{c}{}", self.mode + 1)
    }
}

/// `AXIS=lo:hi:steps`, e.g. `q1=-2:2:41`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GridAxis {
    #[serde(serialize_with = "display")]
    pub axis: Axis,
    pub lo: f64,
    pub hi: f64,
    pub steps: usize,
}

fn display<T: fmt::Display, S: serde::Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

impl GridAxis {
    pub fn nodes(&self) -> Vec<f64> {
        if self.steps == 1 {
            return vec![self.lo];
        }
        let h = (self.hi - self.lo) / (self.steps - 1) as f64;
        (0..self.steps).map(|k| self.lo + h * k as f64).collect()
    }
}

fn parse_f64(s: &str, what: &str) -> Result<f64, String> {
    let v: f64 = s.trim().parse().map_err(|_| format!("invalid {what} '{s}'"))?;
    if !v.is_finite() {
        return Err(format!("{what} must be finite, got '{s}'"));
    }
    Ok(v)
}

impl FromStr for GridAxis {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (axis, range) = s.split_once('=').ok_or("expected AXIS=lo:hi:steps")?;
        let mut chars = axis.trim().chars();
        let quadrature = match chars.next() {
            Some('q') => Quadrature::Q,
            Some('p') => Quadrature::P,
            _ => return Err(format!("axis '{axis}' must be q<k> or p<k>")),
        };
        let mode: usize = chars
            .as_str()
            .parse()
            .map_err(|_| format!("axis '{axis}' must be q<k> or p<k>"))?;
        if mode == 0 {
            return Err(format!("axis '{axis}': modes are numbered from 1"));
        }
        let parts: Vec<&str> = range.split(':').collect();
        let [lo, hi, steps] = parts[..] else {
            return Err("expected AXIS=lo:hi:steps".into());
        };
        let steps: usize = steps.trim().parse().map_err(|_| format!("invalid step count '{steps}'"))?;
        if steps == 0 {
            return Err("step count must be at least 1".into());
        }
        let lo = parse_f64(lo, "grid bound")?;
        let hi = parse_f64(hi, "grid bound")?;
        if hi < lo {
            return Err(format!("grid bounds reversed: {lo} > {hi}"));
        }
        Ok(Self {
            axis: Axis {
                quadrature,
                mode: mode - 1,
            },
            lo,
            hi,
            steps,
        })
    }
}

/// `q1,...,qn:p1,...,pn`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PointSpec {
    pub q: Vec<f64>,
    pub p: Vec<f64>,
}

impl FromStr for PointSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (q, p) = s.split_once(':').ok_or("expected q1,...,qn:p1,...,pn")?;
        let list = |part: &str| -> Result<Vec<f64>, String> {
            part.split(',').map(|x| parse_f64(x, "coordinate")).collect()
        };
        let (q, p) = (list(q)?, list(p)?);
        if q.len() != p.len() {
            return Err(format!("{} q coordinates but {} p coordinates", q.len(), p.len()));
        }
        Ok(Self { q, p })
    }
}

/// `NAME=VAL`.
pub fn parse_tolerance(s: &str) -> Result<(String, f64), String> {
    let (name, value) = s.split_once('=').ok_or("expected NAME=VAL")?;
    Ok((name.trim().to_string(), parse_f64(value, "tolerance")?))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunConfig {
    pub command: Command,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cutoff: Option<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub grid: Vec<GridAxis>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub points: Vec<PointSpec>,
    pub format: Format,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub tolerance: BTreeMap<String, f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl RunConfig {
    pub fn require_n(&self) -> Result<usize, String> {
        self.n.ok_or_else(|| format!("'{}' requires --n", self.command.name()))
    }

    pub fn require_lambda(&self) -> Result<f64, String> {
        self.lambda.ok_or_else(|| format!("'{}' requires --lambda", self.command.name()))
    }

    /// Command-specific field checks that need no numerics.
    pub fn validate(&self) -> Result<(), String> {
        match self.command {
            Command::Verify => {}
            Command::Baseline => {
                self.require_lambda()?;
            }
            _ => {
                self.require_n()?;
                self.require_lambda()?;
            }
        }
        if let Some(lambda) = self.lambda {
            if !lambda.is_finite() {
                return Err("--lambda must be finite".into());
            }
        }
        if self.grid.len() > 2 {
            return Err(format!("at most 2 grid axes, got {}", self.grid.len()));
        }
        if !self.grid.is_empty() || !self.points.is_empty() {
            if self.command != Command::Wigner {
                return Err("--grid and --point apply to 'wigner' only".into());
            }
            let n = self.require_n()?;
            for (i, g) in self.grid.iter().enumerate() {
                if g.axis.mode >= n {
                    return Err(format!("grid axis {} exceeds n = {n}", g.axis));
                }
                if self.grid[..i].iter().any(|h| h.axis == g.axis) {
                    return Err(format!("grid axis {} repeated", g.axis));
                }
            }
            for pt in &self.points {
                if pt.q.len() != n {
                    return Err(format!("point has {} modes, expected {n}", pt.q.len()));
                }
            }
        }
        if self.cutoff.is_some() && self.command != Command::State {
            return Err("--cutoff applies to 'state' only".into());
        }
        if !self.tolerance.is_empty() && self.command != Command::Verify {
            return Err("--tolerance applies to 'verify' only".into());
        }
        Ok(())
    }
}
