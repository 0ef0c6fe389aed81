//! Sweep specifications of the form `<var>:<start>:<stop>:<points>[:log]`.

use std::fmt;
use std::str::FromStr;

/// Variables a sweep may run over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepVar {
    Omega,
    OmegaRotSq,
    Co,
    R,
}

impl SweepVar {
    pub fn name(&self) -> &'static str {
        match self {
            SweepVar::Omega => "omega",
            SweepVar::OmegaRotSq => "omega_rot_sq",
            SweepVar::Co => "co",
            SweepVar::R => "r",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scale {
    Linear,
    Log,
}

/// A validated sweep: `start < stop`, at least two points, and log scale
/// only over positive ranges.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub variable: SweepVar,
    pub start: f64,
    pub stop: f64,
    pub points: usize,
    pub scale: Scale,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepParseError(pub String);

impl fmt::Display for SweepParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid sweep: {}", self.0)
    }
}

impl std::error::Error for SweepParseError {}

impl SweepSpec {
    pub fn new(
        variable: SweepVar,
        start: f64,
        stop: f64,
        points: usize,
        scale: Scale,
    ) -> Result<Self, SweepParseError> {
        if start.is_nan() || stop.is_nan() || start >= stop {
            return Err(SweepParseError(format!(
                "start must be below stop, got {start} >= {stop}"
            )));
        }
        if points < 2 {
            return Err(SweepParseError(format!("need at least 2 points, got {points}")));
        }
        if scale == Scale::Log && start <= 0.0 {
            return Err(SweepParseError(format!(
                "log scale requires a positive start, got {start}"
            )));
        }
        Ok(Self {
            variable,
            start,
            stop,
            points,
            scale,
        })
    }

    /// Grid values, endpoints included.
    pub fn values(&self) -> Vec<f64> {
        let n = self.points;
        (0..n)
            .map(|i| {
                let t = i as f64 / (n - 1) as f64;
                match self.scale {
                    Scale::Linear => self.start + (self.stop - self.start) * t,
                    Scale::Log => {
                        (self.start.ln() + (self.stop.ln() - self.start.ln()) * t).exp()
                    }
                }
            })
            .collect()
    }
}

impl FromStr for SweepSpec {
    type Err = SweepParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 4 && parts.len() != 5 {
            return Err(SweepParseError(format!(
                "expected <var>:<start>:<stop>:<points>[:log], got `{s}`"
            )));
        }
        let variable = match parts[0] {
            "omega" => SweepVar::Omega,
            "omega_rot_sq" => SweepVar::OmegaRotSq,
            "co" => SweepVar::Co,
            "r" => SweepVar::R,
            other => {
                return Err(SweepParseError(format!(
                    "unknown sweep variable `{other}` (expected omega, omega_rot_sq, co, or r)"
                )))
            }
        };
        let parse_f = |txt: &str, what: &str| {
            txt.parse::<f64>()
                .map_err(|_| SweepParseError(format!("cannot parse {what} `{txt}`")))
        };
        let start = parse_f(parts[1], "start")?;
        let stop = parse_f(parts[2], "stop")?;
        let points = parts[3]
            .parse::<usize>()
            .map_err(|_| SweepParseError(format!("cannot parse point count `{}`", parts[3])))?;
        let scale = match parts.get(4) {
            None => Scale::Linear,
            Some(&"log") => Scale::Log,
            Some(other) => {
                return Err(SweepParseError(format!(
                    "unknown scale `{other}` (expected `log`)"
                )))
            }
        };
        SweepSpec::new(variable, start, stop, points, scale)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_linear_sweep() {
        let s: SweepSpec = "omega:1.0:2.0:5".parse().unwrap();
        assert_eq!(s.variable, SweepVar::Omega);
        assert_eq!(s.values(), vec![1.0, 1.25, 1.5, 1.75, 2.0]);
    }

    #[test]
    fn parses_log_sweep() {
        let s: SweepSpec = "co:0.01:100:5:log".parse().unwrap();
        let v = s.values();
        assert!((v[2] - 1.0).abs() < 1e-12);
        assert_eq!(v.len(), 5);
    }

    #[test]
    fn rejects_reversed_range_and_bad_scale() {
        assert!("omega:2.0:1.0:5".parse::<SweepSpec>().is_err());
        assert!("omega:1.0:2.0:1".parse::<SweepSpec>().is_err());
        assert!("co:-1.0:2.0:5:log".parse::<SweepSpec>().is_err());
        assert!("phi:1.0:2.0:5".parse::<SweepSpec>().is_err());
    }
}
