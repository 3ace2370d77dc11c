//! Everything computed for one algebra, plus the closed-form cross-check.

use alloc::vec::Vec;

use crate::closed_form;
use crate::connection::ConnectionTable;
use crate::frame::{Frame, FrameVector};
use crate::geometry::Geometry;
use crate::hermitian::{ShapeForms, Structure};
use crate::lie_algebra::{LieAlgebra4, Origin, SchemaParams};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct FoliationBlock<S> {
    pub minimal: bool,
    pub conformal: bool,
    /// `None` when the foliation is not conformal.
    pub riemannian: Option<bool>,
    pub totally_geodesic: bool,
    pub horizontally_integrable: bool,
    pub vertically_integrable: bool,
    pub conformal_vector: Option<FrameVector<S>>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct NijenhuisEntry<S> {
    pub structure: Structure,
    pub pair: (Frame, Frame),
    pub value: FrameVector<S>,
}

/// Per-structure arrays are indexed `[J1, J2]`.
#[derive(Clone, Debug, PartialEq)]
pub struct HermitianBlock<S> {
    pub divergence: [FrameVector<S>; 2],
    pub cosymplectic: [bool; 2],
    pub integrable: [bool; 2],
    /// `None` where minimality or conformality fails.
    pub harmonic_morphism_producing: [Option<bool>; 2],
    pub shape_forms: ShapeForms<S>,
    pub nijenhuis_nonzero: Vec<NijenhuisEntry<S>>,
}

/// Closed-form predictions for normal-form origins.
#[derive(Clone, Debug, PartialEq)]
pub struct CrossCheck<S> {
    pub params: SchemaParams<S>,
    pub totally_geodesic: bool,
    pub riemannian: bool,
    pub horizontally_integrable: bool,
    pub conformal_vector: FrameVector<S>,
    pub divergence: [FrameVector<S>; 2],
    pub cosymplectic: [bool; 2],
    pub shape_forms: ShapeForms<S>,
    /// Names of the fields that disagree with the tensor side.
    pub mismatches: Vec<&'static str>,
}

impl<S> CrossCheck<S> {
    pub fn agrees(&self) -> bool {
        self.mismatches.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GeometryReport<S> {
    pub algebra: LieAlgebra4<S>,
    pub jacobi: bool,
    pub jacobi_defects: Vec<((Frame, Frame, Frame), FrameVector<S>)>,
    pub connection: ConnectionTable<S>,
    pub foliation: FoliationBlock<S>,
    pub hermitian: HermitianBlock<S>,
    pub cross_check: Option<CrossCheck<S>>,
}

impl<S: Scalar> GeometryReport<S> {
    pub fn new(alg: &LieAlgebra4<S>) -> Self {
        let geo = Geometry::new(alg);
        let conformal_vector = geo.conformal_vector().ok();
        let foliation = FoliationBlock {
            minimal: geo.is_minimal(),
            conformal: conformal_vector.is_some(),
            riemannian: conformal_vector.as_ref().map(FrameVector::is_zero),
            totally_geodesic: geo.is_totally_geodesic(),
            horizontally_integrable: geo.is_horizontally_integrable(),
            vertically_integrable: geo.is_vertically_integrable(),
            conformal_vector,
        };
        let nijenhuis = Structure::BOTH.map(|k| geo.nijenhuis(k));
        let nijenhuis_nonzero = Structure::BOTH
            .iter()
            .zip(&nijenhuis)
            .flat_map(|(&k, table)| {
                table
                    .nonzero_entries()
                    .map(move |(i, j, v)| NijenhuisEntry { structure: k, pair: (i, j), value: v.clone() })
            })
            .collect();
        let divergence = Structure::BOTH.map(|k| geo.divergence_j(k));
        let hermitian = HermitianBlock {
            cosymplectic: [divergence[0].is_zero(), divergence[1].is_zero()],
            divergence,
            integrable: [nijenhuis[0].is_zero(), nijenhuis[1].is_zero()],
            harmonic_morphism_producing: Structure::BOTH.map(|k| geo.produces_harmonic_morphisms(k).ok()),
            shape_forms: geo.shape_forms(),
            nijenhuis_nonzero,
        };
        let jacobi_defects = alg.jacobi_defect();
        let cross_check = alg.origin().schema_params().map(|p| CrossCheck::new(p, &foliation, &hermitian));
        Self {
            algebra: alg.clone(),
            jacobi: jacobi_defects.iter().all(|(_, d)| d.is_zero()),
            jacobi_defects,
            connection: geo.connection().clone(),
            foliation,
            hermitian,
            cross_check,
        }
    }

    pub fn origin(&self) -> &Origin<S> {
        self.algebra.origin()
    }

    /// False only when a closed-form prediction disagrees with the tensors.
    pub fn is_consistent(&self) -> bool {
        self.cross_check.as_ref().is_none_or(CrossCheck::agrees)
    }
}

impl<S: Scalar> CrossCheck<S> {
    fn new(params: SchemaParams<S>, fol: &FoliationBlock<S>, her: &HermitianBlock<S>) -> Self {
        let divergence = Structure::BOTH.map(|k| closed_form::divergence(&params, k));
        let check = Self {
            totally_geodesic: closed_form::totally_geodesic(&params),
            riemannian: closed_form::riemannian(&params),
            horizontally_integrable: closed_form::horizontally_integrable(&params),
            conformal_vector: closed_form::conformal_vector(&params),
            cosymplectic: Structure::BOTH.map(|k| closed_form::cosymplectic(&params, k)),
            shape_forms: closed_form::shape_forms(&params),
            divergence,
            params,
            mismatches: Vec::new(),
        };
        let mut mismatches = Vec::new();
        let mut expect = |ok: bool, name| {
            if !ok {
                mismatches.push(name);
            }
        };
        expect(fol.minimal, "minimal");
        expect(fol.totally_geodesic == check.totally_geodesic, "totally_geodesic");
        expect(fol.riemannian == Some(check.riemannian), "riemannian");
        expect(fol.horizontally_integrable == check.horizontally_integrable, "horizontally_integrable");
        expect(fol.conformal_vector.as_ref() == Some(&check.conformal_vector), "conformal_vector");
        expect(her.divergence == check.divergence, "divergence");
        expect(her.cosymplectic == check.cosymplectic, "cosymplectic");
        expect(her.shape_forms == check.shape_forms, "shape_forms");
        Self { mismatches, ..check }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, Rational};

    #[test]
    fn abelian_report() {
        let r = GeometryReport::new(&LieAlgebra4::<Rational>::abelian());
        assert!(r.jacobi);
        assert!(r.connection.table().iter().flatten().all(FrameVector::is_zero));
        assert!(r.foliation.minimal && r.foliation.conformal && r.foliation.totally_geodesic);
        assert_eq!(r.foliation.riemannian, Some(true));
        assert_eq!(r.hermitian.cosymplectic, [true, true]);
        assert_eq!(r.hermitian.integrable, [true, true]);
        assert_eq!(r.hermitian.harmonic_morphism_producing, [Some(true), Some(true)]);
        assert!(r.hermitian.nijenhuis_nonzero.is_empty());
        assert!(r.is_consistent());
    }

    #[test]
    fn schema_report_cross_checks() {
        let p = SchemaParams { alpha: int(1), z1: int(2), theta2: int(-3), lambda: int(1), ..SchemaParams::zero() };
        let r = GeometryReport::new(&LieAlgebra4::from_schema(&p));
        assert!(r.is_consistent(), "{:?}", r.cross_check);
        assert!(!r.hermitian.nijenhuis_nonzero.is_empty());
        assert!(!r.jacobi);
    }

    #[test]
    fn general_tables_skip_cross_check() {
        let mut six: [FrameVector<Rational>; 6] = core::array::from_fn(|_| FrameVector::zero());
        six[1] = FrameVector::new(int(-1), int(0), int(0), int(0));
        let r = GeometryReport::new(&LieAlgebra4::from_upper(six));
        assert!(r.cross_check.is_none());
        assert!(!r.foliation.conformal);
        assert_eq!(r.foliation.riemannian, None);
        assert_eq!(r.hermitian.harmonic_morphism_producing, [None, None]);
    }
}
