//! Four-dimensional Lie algebras as antisymmetric structure-constant tables.
//!
//! An algebra is either built from the 14-coefficient bracket normal form
//! ([`SchemaParams`]), from one of the example families, or from an arbitrary
//! antisymmetric table. Tables are never rejected for failing Jacobi; the
//! defect is reported instead.

use alloc::vec::Vec;
use core::fmt;

use crate::families::FamilyParams;
use crate::frame::{Frame, FrameVector};
use crate::scalar::Scalar;
use crate::GeometryError;

use Frame::{W, X, Y, Z};

/// Coefficients of the bracket normal form
///
/// ```text
/// [W,Z] = λW
/// [Z,X] = αX + βY + z1 Z + w1 W
/// [Z,Y] = −βX + αY + z2 Z + w2 W
/// [W,X] = aX + bY + z3 Z − z1 W
/// [W,Y] = −bX + aY + z4 Z − z2 W
/// [Y,X] = rX + θ1 Z + θ2 W
/// ```
#[derive(Clone, Debug, PartialEq)]
pub struct SchemaParams<S> {
    pub lambda: S,
    pub alpha: S,
    pub beta: S,
    pub a: S,
    pub b: S,
    pub r: S,
    pub z1: S,
    pub z2: S,
    pub z3: S,
    pub z4: S,
    pub w1: S,
    pub w2: S,
    pub theta1: S,
    pub theta2: S,
}

impl<S: Scalar> SchemaParams<S> {
    /// Parameter names in document order.
    pub const KEYS: [&'static str; 14] = [
        "lambda", "alpha", "beta", "a", "b", "r", "z1", "z2", "z3", "z4", "w1", "w2", "theta1", "theta2",
    ];

    pub fn zero() -> Self {
        Self {
            lambda: S::zero(),
            alpha: S::zero(),
            beta: S::zero(),
            a: S::zero(),
            b: S::zero(),
            r: S::zero(),
            z1: S::zero(),
            z2: S::zero(),
            z3: S::zero(),
            z4: S::zero(),
            w1: S::zero(),
            w2: S::zero(),
            theta1: S::zero(),
            theta2: S::zero(),
        }
    }

    pub fn get(&self, key: &str) -> Option<&S> {
        Some(match key {
            "lambda" => &self.lambda,
            "alpha" => &self.alpha,
            "beta" => &self.beta,
            "a" => &self.a,
            "b" => &self.b,
            "r" => &self.r,
            "z1" => &self.z1,
            "z2" => &self.z2,
            "z3" => &self.z3,
            "z4" => &self.z4,
            "w1" => &self.w1,
            "w2" => &self.w2,
            "theta1" => &self.theta1,
            "theta2" => &self.theta2,
            _ => return None,
        })
    }

    pub fn get_mut(&mut self, key: &str) -> Option<&mut S> {
        Some(match key {
            "lambda" => &mut self.lambda,
            "alpha" => &mut self.alpha,
            "beta" => &mut self.beta,
            "a" => &mut self.a,
            "b" => &mut self.b,
            "r" => &mut self.r,
            "z1" => &mut self.z1,
            "z2" => &mut self.z2,
            "z3" => &mut self.z3,
            "z4" => &mut self.z4,
            "w1" => &mut self.w1,
            "w2" => &mut self.w2,
            "theta1" => &mut self.theta1,
            "theta2" => &mut self.theta2,
            _ => return None,
        })
    }

    /// `(name, value)` pairs in document order.
    pub fn entries(&self) -> Vec<(&'static str, S)> {
        Self::KEYS.iter().map(|&k| (k, self.get(k).cloned().unwrap())).collect()
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> SchemaParams<T> {
        SchemaParams {
            lambda: f(&self.lambda),
            alpha: f(&self.alpha),
            beta: f(&self.beta),
            a: f(&self.a),
            b: f(&self.b),
            r: f(&self.r),
            z1: f(&self.z1),
            z2: f(&self.z2),
            z3: f(&self.z3),
            z4: f(&self.z4),
            w1: f(&self.w1),
            w2: f(&self.w2),
            theta1: f(&self.theta1),
            theta2: f(&self.theta2),
        }
    }
}

impl<S: Scalar> fmt::Display for SchemaParams<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, v) in self.entries() {
            if v.is_zero() {
                continue;
            }
            if !first {
                write!(f, ", ")?;
            }
            write!(f, "{k}={v}")?;
            first = false;
        }
        if first {
            write!(f, "all zero")?;
        }
        Ok(())
    }
}

/// Where a bracket table came from.
#[derive(Clone, Debug, PartialEq)]
pub enum Origin<S> {
    Schema(SchemaParams<S>),
    General,
    Family(FamilyParams<S>),
}

impl<S: Scalar> Origin<S> {
    /// Schema coefficients when the origin guarantees the normal form.
    pub fn schema_params(&self) -> Option<SchemaParams<S>> {
        match self {
            Origin::Schema(p) => Some(p.clone()),
            Origin::Family(p) => Some(p.induced_schema()),
            Origin::General => None,
        }
    }
}

/// Frame pairs `(i, j)` with `i < j`, in table order.
pub const UPPER_PAIRS: [(Frame, Frame); 6] = [(X, Y), (X, Z), (X, W), (Y, Z), (Y, W), (Z, W)];

/// The four basis triples `i < j < k`.
pub const TRIPLES: [(Frame, Frame, Frame); 4] = [(X, Y, Z), (X, Y, W), (X, Z, W), (Y, Z, W)];

/// A 4-dimensional algebra with antisymmetric structure constants
/// `table[i][j] = [e_i, e_j]`.
#[derive(Clone, Debug, PartialEq)]
pub struct LieAlgebra4<S> {
    table: [[FrameVector<S>; 4]; 4],
    origin: Origin<S>,
}

impl<S: Scalar> LieAlgebra4<S> {
    pub fn abelian() -> Self {
        Self::from_schema(&SchemaParams::zero())
    }

    /// The bracket normal form. Entries not listed in the normal form follow by
    /// antisymmetry.
    pub fn from_schema(p: &SchemaParams<S>) -> Self {
        let mut alg = Self::empty(Origin::Schema(p.clone()));
        alg.set(W, Z, FrameVector::new(S::zero(), S::zero(), S::zero(), p.lambda.clone()));
        alg.set(Z, X, FrameVector::new(p.alpha.clone(), p.beta.clone(), p.z1.clone(), p.w1.clone()));
        alg.set(Z, Y, FrameVector::new(-p.beta.clone(), p.alpha.clone(), p.z2.clone(), p.w2.clone()));
        alg.set(W, X, FrameVector::new(p.a.clone(), p.b.clone(), p.z3.clone(), -p.z1.clone()));
        alg.set(W, Y, FrameVector::new(-p.b.clone(), p.a.clone(), p.z4.clone(), -p.z2.clone()));
        alg.set(Y, X, FrameVector::new(p.r.clone(), S::zero(), p.theta1.clone(), p.theta2.clone()));
        alg
    }

    /// A general table from its six entries `[e_i, e_j]`, `i < j`, in
    /// [`UPPER_PAIRS`] order.
    pub fn from_upper(entries: [FrameVector<S>; 6]) -> Self {
        let mut alg = Self::empty(Origin::General);
        for ((i, j), v) in UPPER_PAIRS.into_iter().zip(entries) {
            alg.set(i, j, v);
        }
        alg
    }

    /// A table with an explicit origin; used by the family constructors.
    pub(crate) fn from_entries(origin: Origin<S>, entries: &[(Frame, Frame, FrameVector<S>)]) -> Self {
        let mut alg = Self::empty(origin);
        for (i, j, v) in entries {
            alg.set(*i, *j, v.clone());
        }
        alg
    }

    /// Accepts a full 4×4 table, rejecting it unless it is antisymmetric.
    pub fn try_from_table(table: [[FrameVector<S>; 4]; 4]) -> Result<Self, GeometryError> {
        for i in Frame::ALL {
            if !table[i.index()][i.index()].is_zero() {
                return Err(GeometryError::NotAntisymmetric { i, j: i });
            }
            for j in Frame::ALL {
                let sum = &table[i.index()][j.index()] + &table[j.index()][i.index()];
                if !sum.is_zero() {
                    return Err(GeometryError::NotAntisymmetric { i, j });
                }
            }
        }
        Ok(Self { table, origin: Origin::General })
    }

    fn empty(origin: Origin<S>) -> Self {
        Self { table: core::array::from_fn(|_| core::array::from_fn(|_| FrameVector::zero())), origin }
    }

    fn set(&mut self, i: Frame, j: Frame, v: FrameVector<S>) {
        self.table[j.index()][i.index()] = -&v;
        self.table[i.index()][j.index()] = v;
    }

    pub fn origin(&self) -> &Origin<S> {
        &self.origin
    }

    /// `[e_i, e_j]`
    pub fn structure(&self, i: Frame, j: Frame) -> &FrameVector<S> {
        &self.table[i.index()][j.index()]
    }

    pub fn table(&self) -> &[[FrameVector<S>; 4]; 4] {
        &self.table
    }

    /// The six upper-triangle entries in [`UPPER_PAIRS`] order.
    pub fn upper_entries(&self) -> [FrameVector<S>; 6] {
        UPPER_PAIRS.map(|(i, j)| self.structure(i, j).clone())
    }

    /// Bilinear extension of the table.
    pub fn bracket(&self, u: &FrameVector<S>, v: &FrameVector<S>) -> FrameVector<S> {
        u.expand(|i| v.expand(|j| self.structure(i, j).clone()))
    }

    /// `[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]` for each basis triple.
    pub fn jacobi_defect(&self) -> Vec<((Frame, Frame, Frame), FrameVector<S>)> {
        TRIPLES
            .iter()
            .map(|&(i, j, k)| {
                let (ei, ej, ek) = (FrameVector::basis(i), FrameVector::basis(j), FrameVector::basis(k));
                let defect = self.bracket(self.structure(i, j), &ek)
                    + self.bracket(self.structure(j, k), &ei)
                    + self.bracket(self.structure(k, i), &ej);
                ((i, j, k), defect)
            })
            .collect()
    }

    pub fn is_lie_algebra(&self) -> bool {
        self.jacobi_defect().iter().all(|(_, d)| d.is_zero())
    }

    /// Reads the normal-form coefficients back off the table, or `None` if the
    /// table does not have the normal form.
    pub fn to_schema_params(&self) -> Option<SchemaParams<S>> {
        let wz = self.structure(W, Z);
        let zx = self.structure(Z, X);
        let wx = self.structure(W, X);
        let yx = self.structure(Y, X);
        let p = SchemaParams {
            lambda: wz[W].clone(),
            alpha: zx[X].clone(),
            beta: zx[Y].clone(),
            a: wx[X].clone(),
            b: wx[Y].clone(),
            r: yx[X].clone(),
            z1: zx[Z].clone(),
            z2: self.structure(Z, Y)[Z].clone(),
            z3: wx[Z].clone(),
            z4: self.structure(W, Y)[Z].clone(),
            w1: zx[W].clone(),
            w2: self.structure(Z, Y)[W].clone(),
            theta1: yx[Z].clone(),
            theta2: yx[W].clone(),
        };
        (LieAlgebra4::from_schema(&p).table == self.table).then_some(p)
    }

    /// Converts every structure constant, keeping the origin's parameters.
    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T + Copy) -> LieAlgebra4<T> {
        LieAlgebra4 {
            table: core::array::from_fn(|i| core::array::from_fn(|j| self.table[i][j].map(f))),
            origin: match &self.origin {
                Origin::Schema(p) => Origin::Schema(p.map(f)),
                Origin::General => Origin::General,
                Origin::Family(p) => Origin::Family(p.map(f)),
            },
        }
    }
}

pub fn from_schema<S: Scalar>(p: &SchemaParams<S>) -> LieAlgebra4<S> {
    LieAlgebra4::from_schema(p)
}

pub fn bracket<S: Scalar>(alg: &LieAlgebra4<S>, u: &FrameVector<S>, v: &FrameVector<S>) -> FrameVector<S> {
    alg.bracket(u, v)
}

pub fn jacobi_defect<S: Scalar>(alg: &LieAlgebra4<S>) -> Vec<((Frame, Frame, Frame), FrameVector<S>)> {
    alg.jacobi_defect()
}

pub fn is_lie_algebra<S: Scalar>(alg: &LieAlgebra4<S>) -> bool {
    alg.is_lie_algebra()
}
