use geofol_core::closed_form;
use geofol_core::scalar::{int, ratio};
use geofol_core::verify::{verify_lemma_divergence, verify_theorem_main, SamplerConfig};
use geofol_core::{
    format_rational, parse_rational, Frame, FrameVector, Geometry, LieAlgebra4, Rational, Scalar, SchemaParams,
    Structure,
};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=6).prop_map(|(p, q)| ratio(p, q))
}

fn vector() -> impl Strategy<Value = FrameVector<Rational>> {
    prop::array::uniform4(rational()).prop_map(FrameVector::from_coords)
}

fn schema() -> impl Strategy<Value = SchemaParams<Rational>> {
    prop::array::uniform14(rational()).prop_map(|vals| {
        let mut p = SchemaParams::zero();
        for (k, v) in SchemaParams::<Rational>::KEYS.iter().zip(vals) {
            *p.get_mut(k).unwrap() = v;
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn field_axioms(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
        prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
        prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
        prop_assert!((a.clone() - a.clone()).is_zero());
        if a.is_nonzero() {
            prop_assert_eq!(a.clone() / a.clone(), Rational::one());
        }
    }

    #[test]
    fn literal_round_trip(p in -1000i64..1000, q in 1i64..1000) {
        let r = ratio(p, q);
        let text = format_rational(&r);
        prop_assert_eq!(parse_rational(&text).unwrap(), r.clone());
        prop_assert_eq!(parse_rational(&format!("{p}/{q}")).unwrap(), r);
    }

    #[test]
    fn inner_product_is_positive_definite(v in vector()) {
        let n = v.inner(&v);
        prop_assert!(n >= Rational::zero());
        prop_assert_eq!(n.is_zero(), v.is_zero());
    }

    #[test]
    fn projections_split_orthogonally(u in vector(), v in vector()) {
        prop_assert_eq!(u.horizontal().horizontal(), u.horizontal());
        prop_assert_eq!(&u.horizontal() + &u.vertical(), u.clone());
        prop_assert!(u.horizontal().inner(&u.vertical()).is_zero());
        prop_assert_eq!(u.horizontal().inner(&v), u.inner(&v.horizontal()));
        prop_assert_eq!(u.vertical().inner(&v), u.inner(&v.vertical()));
    }

    #[test]
    fn complex_structures_are_orthogonal(u in vector(), v in vector()) {
        for k in Structure::BOTH {
            prop_assert_eq!(k.apply(&k.apply(&u)), -u.clone());
            prop_assert_eq!(k.apply(&u).inner(&k.apply(&v)), u.inner(&v));
            prop_assert_eq!(k.apply(&u).horizontal(), k.apply(&u.horizontal()));
        }
    }

    #[test]
    fn schema_readback_is_exact(p in schema()) {
        let alg = LieAlgebra4::from_schema(&p);
        prop_assert_eq!(alg.to_schema_params(), Some(p));
    }

    #[test]
    fn bracket_is_bilinear_and_antisymmetric(p in schema(), u in vector(), v in vector(), w in vector(), s in rational()) {
        let alg = LieAlgebra4::from_schema(&p);
        prop_assert_eq!(alg.bracket(&u, &v), -alg.bracket(&v, &u));
        prop_assert_eq!(
            alg.bracket(&u.add_scaled(&s, &w), &v),
            alg.bracket(&u, &v).add_scaled(&s, &alg.bracket(&w, &v))
        );
    }

    #[test]
    fn levi_civita_axioms(p in schema(), u in vector(), v in vector(), w in vector()) {
        let alg = LieAlgebra4::from_schema(&p);
        let geo = Geometry::new(&alg);
        let conn = geo.connection();
        let torsion = &(&conn.apply(&u, &v) - &conn.apply(&v, &u)) - &alg.bracket(&u, &v);
        prop_assert!(torsion.is_zero());
        let metric = conn.apply(&u, &v).inner(&w) + v.inner(&conn.apply(&u, &w));
        prop_assert!(metric.is_zero());
    }

    #[test]
    fn schema_universal_facts(p in schema()) {
        let alg = LieAlgebra4::from_schema(&p);
        let geo = Geometry::new(&alg);
        prop_assert!(geo.is_minimal());
        prop_assert_eq!(geo.conformal_vector().unwrap(), FrameVector::new(int(0), int(0), p.alpha.clone(), p.a.clone()));
        let d1 = geo.divergence_j(Structure::J1);
        let d2 = geo.divergence_j(Structure::J2);
        prop_assert!(d1.horizontal().is_zero() && d2.horizontal().is_zero());
        prop_assert_eq!((&d1 + &d2).vertical(), alg.structure(Frame::X, Frame::Y).vertical().scale(&int(2)));
        for k in Structure::BOTH {
            prop_assert_eq!(geo.divergence_j(k), closed_form::divergence(&p, k));
        }
        prop_assert_eq!(geo.shape_forms(), closed_form::shape_forms(&p));
    }

    #[test]
    fn structural_biconditionals(p in schema()) {
        let alg = LieAlgebra4::from_schema(&p);
        let geo = Geometry::new(&alg);
        let both_cosymplectic = Structure::BOTH.iter().all(|&k| geo.is_cosymplectic(k));
        let riemannian = geo.is_riemannian().unwrap();
        prop_assert_eq!(both_cosymplectic, riemannian && geo.is_horizontally_integrable());
        let both_integrable = Structure::BOTH.iter().all(|&k| geo.is_integrable(k));
        prop_assert_eq!(both_integrable, geo.is_totally_geodesic());
    }
}

#[test]
fn verification_is_deterministic() {
    let cfg = SamplerConfig::new(99, 64);
    assert_eq!(verify_theorem_main(&cfg), verify_theorem_main(&cfg));
    let other = verify_lemma_divergence(&SamplerConfig::new(100, 64));
    assert_eq!(verify_lemma_divergence(&SamplerConfig::new(100, 64)), other);
}
