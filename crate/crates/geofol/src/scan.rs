//! Parameter-grid scans written as CSV.
//!
//! A grid axis `p=lo..hi/steps` samples `steps + 1` equally spaced points
//! from `lo` to `hi` inclusive. Bounds and fixed values are rational literals
//! (`3`, `-1/2`) and the scan runs in exact arithmetic. A decimal literal
//! anywhere (`0.5`, `1e-3`) or `--float` switches the whole scan to binary64
//! with a tolerance zero test.

use std::collections::HashMap;
use std::io::Write;
use std::str::FromStr;

use geofol_core::scalar::decimal_string;
use geofol_core::{
    build_family, format_rational, parse_rational, Approx, FamilyName, FamilyParams, Geometry, LieAlgebra4, Rational,
    Scalar, SchemaParams, Structure,
};
use rayon::prelude::*;

use crate::error::CliError;

/// Fractional digits written in the decimal column of exact scans.
pub const DECIMAL_DIGITS: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    Family(FamilyName),
    Schema,
}

impl Target {
    pub fn keys(self) -> Vec<&'static str> {
        match self {
            Target::Family(name) => name.keys().to_vec(),
            Target::Schema => SchemaParams::<Rational>::KEYS.to_vec(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Literal {
    Exact(Rational),
    Float(f64),
}

impl Literal {
    fn is_float(&self) -> bool {
        matches!(self, Literal::Float(_))
    }

    fn to_f64(&self) -> f64 {
        match self {
            Literal::Exact(r) => r.to_f64(),
            Literal::Float(x) => *x,
        }
    }
}

impl FromStr for Literal {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        let s = s.trim();
        if s.contains(['.', 'e', 'E']) {
            return match s.parse::<f64>() {
                Ok(x) if x.is_finite() => Ok(Literal::Float(x)),
                _ => Err(CliError::input(format!("invalid numeric literal {s:?}"))),
            };
        }
        Ok(Literal::Exact(parse_rational(s)?))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GridAxis {
    pub name: String,
    pub lo: Literal,
    pub hi: Literal,
    pub steps: u32,
}

impl FromStr for GridAxis {
    type Err = CliError;

    fn from_str(spec: &str) -> Result<Self, CliError> {
        let bad = || CliError::input(format!("grid spec {spec:?} is not of the form p=lo..hi/steps"));
        let (name, rest) = spec.split_once('=').ok_or_else(bad)?;
        let (range, steps) = rest.rsplit_once('/').ok_or_else(bad)?;
        let (lo, hi) = range.split_once("..").ok_or_else(bad)?;
        let steps: u32 = steps.trim().parse().map_err(|_| bad())?;
        if steps == 0 {
            return Err(CliError::input(format!("grid {spec:?} has 0 steps; at least 1 is required")));
        }
        Ok(GridAxis { name: name.trim().to_string(), lo: lo.parse()?, hi: hi.parse()?, steps })
    }
}

/// Parses one `--grid` argument, which may hold several comma-separated axes.
pub fn parse_grid_arg(arg: &str) -> Result<Vec<GridAxis>, CliError> {
    arg.split(',').filter(|s| !s.trim().is_empty()).map(str::parse).collect()
}

pub fn parse_fix(arg: &str) -> Result<(String, Literal), CliError> {
    let (k, v) = arg
        .split_once('=')
        .ok_or_else(|| CliError::input(format!("--fix {arg:?} is not of the form k=v")))?;
    Ok((k.trim().to_string(), v.parse()?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Predicate {
    Jacobi,
    Minimal,
    Conformal,
    Riemannian,
    TotallyGeodesic,
    HorizontallyIntegrable,
    VerticallyIntegrable,
    Cosymplectic(Structure),
    BothCosymplectic,
    Integrable(Structure),
    BothIntegrable,
    Harmonic(Structure),
}

impl Predicate {
    pub const NAMES: [&'static str; 15] = [
        "jacobi",
        "minimal",
        "conformal",
        "riemannian",
        "totally-geodesic",
        "horizontally-integrable",
        "vertically-integrable",
        "cosymplectic-J1",
        "cosymplectic-J2",
        "both-cosymplectic",
        "integrable-J1",
        "integrable-J2",
        "both-integrable",
        "harmonic-J1",
        "harmonic-J2",
    ];

    /// `None` where the predicate is undefined (a non-conformal foliation).
    pub fn eval<S: Scalar>(self, alg: &LieAlgebra4<S>) -> Option<bool> {
        let geo = Geometry::new(alg);
        Some(match self {
            Predicate::Jacobi => alg.is_lie_algebra(),
            Predicate::Minimal => geo.is_minimal(),
            Predicate::Conformal => geo.is_conformal(),
            Predicate::Riemannian => return geo.is_riemannian().ok(),
            Predicate::TotallyGeodesic => geo.is_totally_geodesic(),
            Predicate::HorizontallyIntegrable => geo.is_horizontally_integrable(),
            Predicate::VerticallyIntegrable => geo.is_vertically_integrable(),
            Predicate::Cosymplectic(k) => geo.is_cosymplectic(k),
            Predicate::BothCosymplectic => Structure::BOTH.iter().all(|&k| geo.is_cosymplectic(k)),
            Predicate::Integrable(k) => geo.is_integrable(k),
            Predicate::BothIntegrable => Structure::BOTH.iter().all(|&k| geo.is_integrable(k)),
            Predicate::Harmonic(k) => return geo.produces_harmonic_morphisms(k).ok(),
        })
    }
}

impl FromStr for Predicate {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        use Structure::{J1, J2};
        Ok(match s {
            "jacobi" => Predicate::Jacobi,
            "minimal" => Predicate::Minimal,
            "conformal" => Predicate::Conformal,
            "riemannian" => Predicate::Riemannian,
            "totally-geodesic" => Predicate::TotallyGeodesic,
            "horizontally-integrable" => Predicate::HorizontallyIntegrable,
            "vertically-integrable" => Predicate::VerticallyIntegrable,
            "cosymplectic-J1" => Predicate::Cosymplectic(J1),
            "cosymplectic-J2" => Predicate::Cosymplectic(J2),
            "both-cosymplectic" => Predicate::BothCosymplectic,
            "integrable-J1" => Predicate::Integrable(J1),
            "integrable-J2" => Predicate::Integrable(J2),
            "both-integrable" => Predicate::BothIntegrable,
            "harmonic-J1" => Predicate::Harmonic(J1),
            "harmonic-J2" => Predicate::Harmonic(J2),
            _ => {
                return Err(CliError::input(format!(
                    "unknown predicate {s:?} (expected one of {})",
                    Predicate::NAMES.join(", ")
                )))
            }
        })
    }
}

#[derive(Clone, Debug)]
pub struct ScanSpec {
    pub target: Target,
    pub fixed: Vec<(String, Literal)>,
    pub grid: Vec<GridAxis>,
    pub predicate: Predicate,
    pub predicate_name: String,
    pub force_float: bool,
    pub tolerance: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ScanRow {
    /// One value per grid axis, in axis order.
    pub point: Vec<Literal>,
    pub admissible: bool,
    pub jacobi: Option<bool>,
    pub value: Option<bool>,
}

#[derive(Clone, Debug)]
pub struct ScanResult {
    pub exact: bool,
    pub rows: Vec<ScanRow>,
}

impl ScanSpec {
    pub fn is_exact(&self) -> bool {
        !self.force_float
            && !self.fixed.iter().any(|(_, v)| v.is_float())
            && !self.grid.iter().any(|g| g.lo.is_float() || g.hi.is_float())
    }

    /// Checks parameter names and fixed-value admissibility.
    pub fn validate(&self) -> Result<(), CliError> {
        if self.grid.is_empty() {
            return Err(CliError::input("scan needs at least one --grid axis"));
        }
        let keys = self.target.keys();
        let mut seen: Vec<&str> = Vec::new();
        for name in self.fixed.iter().map(|(k, _)| k.as_str()).chain(self.grid.iter().map(|g| g.name.as_str())) {
            if !keys.contains(&name) {
                return Err(CliError::input(format!(
                    "unknown parameter {name:?} (expected one of {})",
                    keys.join(", ")
                )));
            }
            if seen.contains(&name) {
                return Err(CliError::input(format!("parameter {name:?} is given more than once")));
            }
            seen.push(name);
        }
        if let Target::Family(name) = self.target {
            let gridded: Vec<&str> = self.grid.iter().map(|g| g.name.as_str()).collect();
            let probe = if self.is_exact() {
                let fixed = self.fixed_exact();
                FamilyParams::from_fn(name, |k| fixed.get(k).cloned().unwrap_or_else(Rational::zero)).violations()
            } else {
                let fixed = self.fixed_float();
                FamilyParams::from_fn(name, |k| fixed.get(k).copied().unwrap_or_else(Approx::zero)).violations()
            };
            if let Some(gate) = probe.iter().find(|g| g.params.iter().all(|p| !gridded.contains(p))) {
                return Err(CliError::input(format!("inadmissible fixed values: {gate}")));
            }
        }
        Ok(())
    }

    fn fixed_exact(&self) -> HashMap<&str, Rational> {
        self.fixed
            .iter()
            .filter_map(|(k, v)| match v {
                Literal::Exact(r) => Some((k.as_str(), r.clone())),
                Literal::Float(_) => None,
            })
            .collect()
    }

    fn fixed_float(&self) -> HashMap<&str, Approx> {
        self.fixed.iter().map(|(k, v)| (k.as_str(), Approx::new(v.to_f64(), self.tolerance))).collect()
    }

    /// Grid points in row-major order, first axis outermost.
    pub fn points(&self) -> Vec<Vec<Literal>> {
        let exact = self.is_exact();
        let axes: Vec<Vec<Literal>> = self
            .grid
            .iter()
            .map(|g| {
                (0..=g.steps)
                    .map(|i| match (exact, &g.lo, &g.hi) {
                        (true, Literal::Exact(lo), Literal::Exact(hi)) => {
                            let t = Rational::from_i64(i64::from(i)) / Rational::from_i64(i64::from(g.steps));
                            Literal::Exact(lo.clone() + (hi.clone() - lo.clone()) * t)
                        }
                        _ => {
                            let (lo, hi) = (g.lo.to_f64(), g.hi.to_f64());
                            Literal::Float(lo + (hi - lo) * f64::from(i) / f64::from(g.steps))
                        }
                    })
                    .collect()
            })
            .collect();
        let mut points = vec![Vec::new()];
        for axis in &axes {
            points = points
                .into_iter()
                .flat_map(|p| {
                    axis.iter().map(move |v| {
                        let mut q = p.clone();
                        q.push(v.clone());
                        q
                    })
                })
                .collect();
        }
        points
    }

    fn evaluate_point(&self, point: &[Literal]) -> ScanRow {
        let (admissible, jacobi, value) = if self.is_exact() {
            let mut values = self.fixed_exact();
            for (g, v) in self.grid.iter().zip(point) {
                if let Literal::Exact(r) = v {
                    values.insert(g.name.as_str(), r.clone());
                }
            }
            self.evaluate_with(|k| values.get(k).cloned().unwrap_or_else(Rational::zero))
        } else {
            let mut values = self.fixed_float();
            for (g, v) in self.grid.iter().zip(point) {
                values.insert(g.name.as_str(), Approx::new(v.to_f64(), self.tolerance));
            }
            self.evaluate_with(|k| values.get(k).copied().unwrap_or_else(Approx::zero))
        };
        ScanRow { point: point.to_vec(), admissible, jacobi, value }
    }

    fn evaluate_with<S: Scalar>(&self, value: impl Fn(&str) -> S) -> (bool, Option<bool>, Option<bool>) {
        let alg = match self.target {
            Target::Family(name) => match build_family(&FamilyParams::from_fn(name, &value)) {
                Ok(alg) => alg,
                Err(_) => return (false, None, None),
            },
            Target::Schema => {
                let mut p = SchemaParams::zero();
                for k in SchemaParams::<Rational>::KEYS {
                    *p.get_mut(k).unwrap() = value(k);
                }
                LieAlgebra4::from_schema(&p)
            }
        };
        (true, Some(alg.is_lie_algebra()), self.predicate.eval(&alg))
    }

    pub fn run(&self) -> Result<ScanResult, CliError> {
        self.validate()?;
        let rows = self.points().par_iter().map(|p| self.evaluate_point(p)).collect();
        Ok(ScanResult { exact: self.is_exact(), rows })
    }
}

fn cell(b: Option<bool>) -> &'static str {
    match b {
        Some(true) => "true",
        Some(false) => "false",
        None => "n/a",
    }
}

pub fn write_csv(spec: &ScanSpec, result: &ScanResult, mut out: impl Write) -> Result<(), CliError> {
    let io = |source| CliError::Io { path: "scan output".into(), source };
    let target = match spec.target {
        Target::Family(name) => format!("family={}", name.as_str()),
        Target::Schema => "schema".into(),
    };
    if result.exact {
        writeln!(out, "# mode=exact {target}").map_err(io)?;
    } else {
        writeln!(out, "# mode=float tol={:e} {target}", spec.tolerance).map_err(io)?;
    }
    if !spec.fixed.is_empty() {
        let fixed: Vec<String> = spec
            .fixed
            .iter()
            .map(|(k, v)| match v {
                Literal::Exact(r) => format!("{k}={}", format_rational(r)),
                Literal::Float(x) => format!("{k}={x}"),
            })
            .collect();
        writeln!(out, "# fixed {}", fixed.join(" ")).map_err(io)?;
    }
    let mut w = csv::Writer::from_writer(out);
    let mut header: Vec<String> = Vec::new();
    for g in &spec.grid {
        header.push(g.name.clone());
        if result.exact {
            header.push(format!("{}_rational", g.name));
        }
    }
    header.extend(["admissible".into(), "jacobi".into(), spec.predicate_name.clone()]);
    let csv_err = |e: csv::Error| CliError::Io { path: "scan output".into(), source: e.into() };
    w.write_record(&header).map_err(csv_err)?;
    for row in &result.rows {
        let mut record: Vec<String> = Vec::new();
        for v in &row.point {
            match v {
                Literal::Exact(r) => {
                    record.push(decimal_string(r, DECIMAL_DIGITS));
                    record.push(format_rational(r));
                }
                Literal::Float(x) => record.push(x.to_string()),
            }
        }
        record.push(row.admissible.to_string());
        record.push(cell(row.jacobi).into());
        record.push(cell(row.value).into());
        w.write_record(&record).map_err(csv_err)?;
    }
    w.flush().map_err(io)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(target: Target, fixed: &[&str], grid: &str, predicate: &str) -> ScanSpec {
        ScanSpec {
            target,
            fixed: fixed.iter().map(|f| parse_fix(f).unwrap()).collect(),
            grid: parse_grid_arg(grid).unwrap(),
            predicate: predicate.parse().unwrap(),
            predicate_name: predicate.into(),
            force_float: false,
            tolerance: Approx::DEFAULT_TOL,
        }
    }

    #[test]
    fn grid_parsing() {
        let axes = parse_grid_arg("alpha=-2..2/8, w2=-1/2..1/2/4").unwrap();
        assert_eq!(axes.len(), 2);
        assert_eq!(axes[1].lo, Literal::Exact(parse_rational("-1/2").unwrap()));
        assert_eq!(axes[1].steps, 4);
        assert!(parse_grid_arg("alpha=-2..2/0").is_err());
        assert!(parse_grid_arg("alpha=-2..2").is_err());
        assert!(matches!(parse_grid_arg("alpha=0..0.5/2").unwrap()[0].hi, Literal::Float(_)));
    }

    #[test]
    fn points_are_row_major() {
        let s = spec(Target::Schema, &[], "alpha=0..1/1,a=0..2/2", "jacobi");
        let pts = s.points();
        assert_eq!(pts.len(), 6);
        assert_eq!(pts[1], vec![Literal::Exact(Rational::zero()), Literal::Exact(Rational::one())]);
        assert_eq!(pts[3][0], Literal::Exact(Rational::one()));
    }

    #[test]
    fn schema_theta_scan_hits_origin_only() {
        let s = spec(Target::Schema, &["alpha=0", "a=0"], "theta1=-2..2/4,theta2=-2..2/4", "both-cosymplectic");
        let result = s.run().unwrap();
        let hits: Vec<_> = result.rows.iter().filter(|r| r.value == Some(true)).collect();
        assert_eq!(hits.len(), 1);
        assert_eq!(hits[0].point, vec![Literal::Exact(Rational::zero()); 2]);
    }

    #[test]
    fn gates_on_fixed_values_are_input_errors() {
        let s = spec(Target::Family(FamilyName::G20), &["beta=1"], "alpha=-2..2/4", "jacobi");
        assert_eq!(s.run().unwrap_err().exit_code(), 2);
        let s = spec(Target::Family(FamilyName::G20), &["a=1", "beta=1"], "alpha=-2..2/4", "jacobi");
        let rows = s.run().unwrap().rows;
        assert!(!rows[2].admissible);
        assert!(rows.iter().filter(|r| r.admissible).all(|r| r.jacobi == Some(true)));
    }

    #[test]
    fn unknown_names_are_input_errors() {
        let s = spec(Target::Schema, &["gamma=1"], "alpha=0..1/1", "jacobi");
        assert_eq!(s.run().unwrap_err().exit_code(), 2);
        assert!("cosymplectic".parse::<Predicate>().is_err());
    }

    #[test]
    fn float_and_exact_agree_on_a_coarse_grid() {
        let mut s = spec(Target::Schema, &["theta1=0", "theta2=0", "a=0"], "alpha=-1..1/4", "both-cosymplectic");
        let exact: Vec<_> = s.run().unwrap().rows.into_iter().map(|r| r.value).collect();
        s.force_float = true;
        let float = s.run().unwrap();
        assert!(!float.exact);
        assert_eq!(exact, float.rows.into_iter().map(|r| r.value).collect::<Vec<_>>());
    }

    #[test]
    fn csv_layout() {
        let s = spec(Target::Schema, &["a=0"], "alpha=-1/2..1/2/2", "both-cosymplectic");
        let result = s.run().unwrap();
        let mut buf = Vec::new();
        write_csv(&s, &result, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "# mode=exact schema");
        assert_eq!(lines[1], "# fixed a=0");
        assert_eq!(lines[2], "alpha,alpha_rational,admissible,jacobi,both-cosymplectic");
        assert_eq!(lines[3], "-0.5,-1/2,true,true,false");
        assert_eq!(lines[4], "0,0,true,true,true");
    }
}
