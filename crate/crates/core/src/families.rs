//! The example families `g5`, `g18` and `g20`.
//!
//! Each family is a specialization of the bracket normal form whose
//! coefficients are rational functions of the family parameters. The
//! admissibility gates run before any division, so the denominators
//! `aβ − αb`, `b` and `α` are never zero at construction.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::frame::{Frame, FrameVector};
use crate::lie_algebra::{LieAlgebra4, Origin, SchemaParams};
use crate::report::GeometryReport;
use crate::scalar::Scalar;
use crate::GeometryError;

use Frame::{W, X, Y, Z};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyName {
    G5,
    G18,
    G20,
}

impl FamilyName {
    pub const ALL: [FamilyName; 3] = [FamilyName::G5, FamilyName::G18, FamilyName::G20];

    pub fn as_str(self) -> &'static str {
        match self {
            FamilyName::G5 => "g5",
            FamilyName::G18 => "g18",
            FamilyName::G20 => "g20",
        }
    }

    /// Parameter names in document order.
    pub fn keys(self) -> &'static [&'static str] {
        match self {
            FamilyName::G5 => &["alpha", "a", "beta", "b", "r"],
            FamilyName::G18 => &["beta", "b", "z3", "z4", "theta1", "theta2"],
            FamilyName::G20 => &["alpha", "a", "beta", "w1", "w2"],
        }
    }

    /// The admissibility gates of the family.
    pub fn gates(self) -> &'static [Gate] {
        match self {
            FamilyName::G5 => &[
                Gate { family: FamilyName::G5, condition: "r = 0", params: &["r"] },
                Gate { family: FamilyName::G5, condition: "aβ−αb = 0", params: &["alpha", "a", "beta", "b"] },
            ],
            FamilyName::G18 => &[
                Gate { family: FamilyName::G18, condition: "b = 0", params: &["b"] },
                Gate { family: FamilyName::G18, condition: "β = 0", params: &["beta"] },
            ],
            FamilyName::G20 => &[
                Gate { family: FamilyName::G20, condition: "α = 0", params: &["alpha"] },
                Gate { family: FamilyName::G20, condition: "a = 0", params: &["a"] },
                Gate { family: FamilyName::G20, condition: "β = 0", params: &["beta"] },
            ],
        }
    }
}

impl fmt::Display for FamilyName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FamilyName {
    type Err = GeometryError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "g5" => Ok(FamilyName::G5),
            "g18" => Ok(FamilyName::G18),
            "g20" => Ok(FamilyName::G20),
            _ => Err(GeometryError::UnknownFamily),
        }
    }
}

/// One admissibility condition; `condition` names the violated equation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Gate {
    pub family: FamilyName,
    pub condition: &'static str,
    pub params: &'static [&'static str],
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.family, self.condition)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum FamilyParams<S> {
    G5 { alpha: S, a: S, beta: S, b: S, r: S },
    G18 { beta: S, b: S, z3: S, z4: S, theta1: S, theta2: S },
    G20 { alpha: S, a: S, beta: S, w1: S, w2: S },
}

impl<S: Scalar> FamilyParams<S> {
    /// Builds parameters by name; `value` is called once per key of the family.
    pub fn from_fn(name: FamilyName, mut value: impl FnMut(&'static str) -> S) -> Self {
        match name {
            FamilyName::G5 => FamilyParams::G5 {
                alpha: value("alpha"),
                a: value("a"),
                beta: value("beta"),
                b: value("b"),
                r: value("r"),
            },
            FamilyName::G18 => FamilyParams::G18 {
                beta: value("beta"),
                b: value("b"),
                z3: value("z3"),
                z4: value("z4"),
                theta1: value("theta1"),
                theta2: value("theta2"),
            },
            FamilyName::G20 => FamilyParams::G20 {
                alpha: value("alpha"),
                a: value("a"),
                beta: value("beta"),
                w1: value("w1"),
                w2: value("w2"),
            },
        }
    }

    pub fn name(&self) -> FamilyName {
        match self {
            FamilyParams::G5 { .. } => FamilyName::G5,
            FamilyParams::G18 { .. } => FamilyName::G18,
            FamilyParams::G20 { .. } => FamilyName::G20,
        }
    }

    pub fn get(&self, key: &str) -> Option<&S> {
        match (self, key) {
            (FamilyParams::G5 { alpha, .. } | FamilyParams::G20 { alpha, .. }, "alpha") => Some(alpha),
            (FamilyParams::G5 { a, .. } | FamilyParams::G20 { a, .. }, "a") => Some(a),
            (
                FamilyParams::G5 { beta, .. } | FamilyParams::G18 { beta, .. } | FamilyParams::G20 { beta, .. },
                "beta",
            ) => Some(beta),
            (FamilyParams::G5 { b, .. } | FamilyParams::G18 { b, .. }, "b") => Some(b),
            (FamilyParams::G5 { r, .. }, "r") => Some(r),
            (FamilyParams::G18 { z3, .. }, "z3") => Some(z3),
            (FamilyParams::G18 { z4, .. }, "z4") => Some(z4),
            (FamilyParams::G18 { theta1, .. }, "theta1") => Some(theta1),
            (FamilyParams::G18 { theta2, .. }, "theta2") => Some(theta2),
            (FamilyParams::G20 { w1, .. }, "w1") => Some(w1),
            (FamilyParams::G20 { w2, .. }, "w2") => Some(w2),
            _ => None,
        }
    }

    /// `(name, value)` pairs in document order.
    pub fn entries(&self) -> Vec<(&'static str, S)> {
        self.name().keys().iter().map(|&k| (k, self.get(k).cloned().unwrap())).collect()
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> FamilyParams<T> {
        FamilyParams::from_fn(self.name(), |k| f(self.get(k).unwrap()))
    }

    /// Every gate this parameter set violates.
    pub fn violations(&self) -> Vec<Gate> {
        let v = |k: &str| self.get(k).cloned().unwrap();
        self.name()
            .gates()
            .iter()
            .filter(|gate| {
                let guarded = match (self.name(), gate.condition) {
                    (FamilyName::G5, "aβ−αb = 0") => v("a") * v("beta") - v("alpha") * v("b"),
                    _ => v(gate.params[0]),
                };
                guarded.is_zero()
            })
            .copied()
            .collect()
    }

    pub fn check_admissible(&self) -> Result<(), GeometryError> {
        match self.violations().first() {
            Some(&gate) => Err(GeometryError::Inadmissible(gate)),
            None => Ok(()),
        }
    }

    /// The normal-form coefficients this family specializes to.
    ///
    /// Panics on inadmissible parameters; call [`check_admissible`] first.
    ///
    /// [`check_admissible`]: FamilyParams::check_admissible
    pub fn induced_schema(&self) -> SchemaParams<S> {
        let two = S::from_i64(2);
        match self.clone() {
            FamilyParams::G5 { alpha, a, beta, b, r } => {
                let d = a.clone() * beta.clone() - alpha.clone() * b.clone();
                let two_d = two * d.clone();
                SchemaParams {
                    alpha: alpha.clone(),
                    beta: beta.clone(),
                    a: a.clone(),
                    b: b.clone(),
                    r: r.clone(),
                    z1: r.clone() * (beta.clone() * b.clone() - alpha.clone() * a.clone()) / two_d.clone(),
                    w1: r.clone() * (alpha.clone() * alpha.clone() - beta.clone() * beta.clone()) / two_d.clone(),
                    z2: r.clone() * (alpha.clone() * b.clone() + beta.clone() * a.clone()) / two_d.clone(),
                    w2: -(r.clone() * alpha.clone() * beta.clone()) / d.clone(),
                    z3: r.clone() * (b.clone() * b.clone() - a.clone() * a.clone()) / two_d.clone(),
                    z4: r.clone() * a.clone() * b.clone() / d,
                    theta1: -(a * r.clone() * r.clone()) / two_d.clone(),
                    theta2: alpha * r.clone() * r / two_d,
                    ..SchemaParams::zero()
                }
            }
            FamilyParams::G18 { beta, b, z3, z4, theta1, theta2 } => {
                let ratio = beta.clone() / b.clone();
                SchemaParams {
                    beta: beta.clone(),
                    b: b.clone(),
                    z1: ratio.clone() * z3.clone(),
                    w1: -(ratio.clone() * ratio.clone() * z3.clone()),
                    z2: ratio.clone() * z4.clone(),
                    w2: -(ratio.clone() * ratio * z4.clone()),
                    z3,
                    z4,
                    theta1,
                    theta2,
                    ..SchemaParams::zero()
                }
            }
            FamilyParams::G20 { alpha, a, beta, w1, w2 } => {
                let ratio = a.clone() / alpha.clone();
                SchemaParams {
                    alpha,
                    beta: beta.clone(),
                    a,
                    b: beta * ratio.clone(),
                    z1: -(ratio.clone() * w1.clone()),
                    z2: -(ratio.clone() * w2.clone()),
                    z3: -(ratio.clone() * ratio.clone() * w1.clone()),
                    z4: -(ratio.clone() * ratio * w2.clone()),
                    w1,
                    w2,
                    ..SchemaParams::zero()
                }
            }
        }
    }

    /// The bracket table entry by entry as the family displays it.
    fn display_entries(&self) -> Vec<(Frame, Frame, FrameVector<S>)> {
        let two = || S::from_i64(2);
        let zero = S::zero;
        match self.clone() {
            FamilyParams::G5 { alpha, a, beta, b, r } => {
                let d = a.clone() * beta.clone() - alpha.clone() * b.clone();
                let over = |num: S| num / (two() * d.clone());
                let c = |x: &S| x.clone();
                alloc::vec![
                    (Z, X, FrameVector::new(
                        c(&alpha),
                        c(&beta),
                        over(c(&r) * (c(&beta) * c(&b) - c(&alpha) * c(&a))),
                        over(c(&r) * (c(&alpha) * c(&alpha) - c(&beta) * c(&beta))),
                    )),
                    (Z, Y, FrameVector::new(
                        -c(&beta),
                        c(&alpha),
                        over(c(&r) * (c(&alpha) * c(&b) + c(&beta) * c(&a))),
                        -(c(&r) * c(&alpha) * c(&beta) / c(&d)),
                    )),
                    (W, X, FrameVector::new(
                        c(&a),
                        c(&b),
                        over(c(&r) * (c(&b) * c(&b) - c(&a) * c(&a))),
                        over(c(&r) * (c(&alpha) * c(&a) - c(&beta) * c(&b))),
                    )),
                    (W, Y, FrameVector::new(
                        -c(&b),
                        c(&a),
                        c(&r) * c(&a) * c(&b) / c(&d),
                        -over(c(&r) * (c(&alpha) * c(&b) + c(&beta) * c(&a))),
                    )),
                    (Y, X, FrameVector::new(
                        c(&r),
                        zero(),
                        -over(c(&a) * c(&r) * c(&r)),
                        over(c(&alpha) * c(&r) * c(&r)),
                    )),
                ]
            }
            FamilyParams::G18 { beta, b, z3, z4, theta1, theta2 } => {
                let bb = b.clone() * b.clone();
                let beta2 = beta.clone() * beta.clone();
                alloc::vec![
                    (Z, X, FrameVector::new(
                        zero(),
                        beta.clone(),
                        beta.clone() * z3.clone() / b.clone(),
                        -(beta2.clone() * z3.clone() / bb.clone()),
                    )),
                    (Z, Y, FrameVector::new(
                        -beta.clone(),
                        zero(),
                        beta.clone() * z4.clone() / b.clone(),
                        -(beta2 * z4.clone() / bb),
                    )),
                    (W, X, FrameVector::new(zero(), b.clone(), z3.clone(), -(beta.clone() * z3 / b.clone()))),
                    (W, Y, FrameVector::new(-b.clone(), zero(), z4.clone(), -(beta * z4 / b))),
                    (Y, X, FrameVector::new(zero(), zero(), theta1, theta2)),
                ]
            }
            FamilyParams::G20 { alpha, a, beta, w1, w2 } => {
                let aa = a.clone() * a.clone();
                let alpha2 = alpha.clone() * alpha.clone();
                let ba = beta.clone() * a.clone() / alpha.clone();
                alloc::vec![
                    (Z, X, FrameVector::new(
                        alpha.clone(),
                        beta.clone(),
                        -(a.clone() * w1.clone() / alpha.clone()),
                        w1.clone(),
                    )),
                    (Z, Y, FrameVector::new(
                        -beta,
                        alpha.clone(),
                        -(a.clone() * w2.clone() / alpha.clone()),
                        w2.clone(),
                    )),
                    (W, X, FrameVector::new(
                        a.clone(),
                        ba.clone(),
                        -(aa.clone() * w1.clone() / alpha2.clone()),
                        a.clone() / alpha.clone() * w1,
                    )),
                    (W, Y, FrameVector::new(
                        -ba,
                        a.clone(),
                        -(aa * w2.clone() / alpha2),
                        a / alpha * w2,
                    )),
                ]
            }
        }
    }
}

impl<S: Scalar> fmt::Display for FamilyParams<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", self.name())?;
        for (n, (k, v)) in self.entries().into_iter().enumerate() {
            if n > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{k}={v}")?;
        }
        write!(f, ")")
    }
}

/// The family's bracket table, built from its display after the gates pass.
pub fn build_family<S: Scalar>(p: &FamilyParams<S>) -> Result<LieAlgebra4<S>, GeometryError> {
    p.check_admissible()?;
    Ok(LieAlgebra4::from_entries(Origin::Family(p.clone()), &p.display_entries()))
}

pub fn family_report<S: Scalar>(p: &FamilyParams<S>) -> Result<GeometryReport<S>, GeometryError> {
    Ok(GeometryReport::new(&build_family(p)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio, Rational};

    fn g5(alpha: i64, a: i64, beta: i64, b: i64, r: i64) -> FamilyParams<Rational> {
        FamilyParams::G5 { alpha: int(alpha), a: int(a), beta: int(beta), b: int(b), r: int(r) }
    }

    fn vec4(x: Rational, y: Rational, z: Rational, w: Rational) -> FrameVector<Rational> {
        FrameVector::new(x, y, z, w)
    }

    #[test]
    fn g5_yx_entry() {
        let alg = build_family(&g5(1, 0, 0, 1, 1)).unwrap();
        assert_eq!(alg.structure(Y, X), &vec4(int(1), int(0), int(0), ratio(-1, 2)));
    }

    #[test]
    fn g18_zx_entry() {
        let p = FamilyParams::G18 { beta: int(1), b: int(1), z3: int(2), z4: int(0), theta1: int(0), theta2: int(0) };
        let alg = build_family(&p).unwrap();
        assert_eq!(alg.structure(Z, X), &vec4(int(0), int(1), int(2), int(-2)));
    }

    #[test]
    fn g20_wx_entry() {
        let p = FamilyParams::G20 { alpha: int(1), a: int(-2), beta: int(1), w1: int(0), w2: int(1) };
        let alg = build_family(&p).unwrap();
        assert_eq!(alg.structure(W, X), &vec4(int(-2), int(-2), int(0), int(0)));
        assert_eq!(p.induced_schema().b, int(-2));
    }

    #[test]
    fn gates_name_the_violation() {
        let err = build_family(&g5(1, 1, 1, 1, 1)).unwrap_err();
        assert_eq!(alloc::format!("{err}"), "inadmissible parameters: g5: aβ−αb = 0");
        assert!(build_family(&g5(1, 0, 0, 1, 0)).is_err());
        let g18 = FamilyParams::G18 { beta: int(0), b: int(1), z3: int(0), z4: int(0), theta1: int(0), theta2: int(0) };
        assert_eq!(g18.violations()[0].condition, "β = 0");
        let g20 = FamilyParams::G20 { alpha: int(0), a: int(0), beta: int(1), w1: int(0), w2: int(0) };
        assert_eq!(g20.violations().len(), 2);
    }

    #[test]
    fn families_are_schema_specializations() {
        let samples = [
            g5(2, -1, 3, 1, -2),
            FamilyParams::G18 { beta: int(-2), b: int(3), z3: int(1), z4: int(-4), theta1: int(2), theta2: ratio(1, 2) },
            FamilyParams::G20 { alpha: int(3), a: int(-2), beta: ratio(1, 2), w1: int(4), w2: int(-1) },
        ];
        for p in samples {
            let alg = build_family(&p).unwrap();
            let via_schema = LieAlgebra4::from_schema(&p.induced_schema());
            assert_eq!(alg.table(), via_schema.table(), "{p}");
            assert_eq!(alg.to_schema_params(), Some(p.induced_schema()));
        }
    }

    #[test]
    fn family_reports() {
        let g18 = FamilyParams::G18 { beta: int(2), b: int(1), z3: int(1), z4: int(0), theta1: int(1), theta2: int(0) };
        assert_eq!(family_report(&g18).unwrap().foliation.riemannian, Some(true));
        let r = family_report(&g5(1, 0, 0, 1, 1)).unwrap();
        assert_eq!(r.foliation.riemannian, Some(false));
        assert!(!r.foliation.horizontally_integrable);
        // On the printed locus 2α² + a·w2 = 0 the divergence of J1 is 2aZ − 2αW ≠ 0.
        let g20 = FamilyParams::G20 { alpha: int(1), a: int(-2), beta: int(1), w1: int(0), w2: int(1) };
        let r = family_report(&g20).unwrap();
        assert_eq!(r.hermitian.divergence[0], vec4(int(0), int(0), int(-4), int(-2)));
        assert_eq!(r.hermitian.cosymplectic, [false, false]);
        assert!(r.jacobi);
    }
}
