//! Independent integer oracle for the tensor pipeline.
//!
//! Brackets are written out from the normal form directly into raw
//! structure constants, and every derived quantity is computed by index sums
//! over `i128`. The Levi-Civita connection uses the structure-constant
//! formula `2Γ_ij^k = c_ij^k − c_jk^i + c_ki^j`, so all values are carried
//! doubled to stay integral.

use geofol_core::scalar::int;
use geofol_core::{
    build_family, FamilyName, FamilyParams, Frame, FrameVector, Geometry, LieAlgebra4, Rational, SchemaParams,
    Structure,
};
use proptest::prelude::*;

type V = [i128; 4];
type C = [[V; 4]; 4];

const X: usize = 0;
const Y: usize = 1;
const Z: usize = 2;
const W: usize = 3;

fn neg(v: V) -> V {
    v.map(|c| -c)
}

fn add(a: V, b: V) -> V {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]]
}

fn sub(a: V, b: V) -> V {
    add(a, neg(b))
}

fn horizontal(v: V) -> V {
    [v[0], v[1], 0, 0]
}

fn vertical(v: V) -> V {
    [0, 0, v[2], v[3]]
}

/// `[λ, α, β, a, b, r, z1, z2, z3, z4, w1, w2, θ1, θ2]`
fn constants(p: [i128; 14]) -> C {
    let [lambda, alpha, beta, a, b, r, z1, z2, z3, z4, w1, w2, t1, t2] = p;
    let mut c = [[[0; 4]; 4]; 4];
    let mut set = |i: usize, j: usize, v: V| {
        c[i][j] = v;
        c[j][i] = neg(v);
    };
    set(W, Z, [0, 0, 0, lambda]);
    set(Z, X, [alpha, beta, z1, w1]);
    set(Z, Y, [-beta, alpha, z2, w2]);
    set(W, X, [a, b, z3, -z1]);
    set(W, Y, [-b, a, z4, -z2]);
    set(Y, X, [r, 0, t1, t2]);
    c
}

fn bracket(c: &C, u: V, v: V) -> V {
    let mut out = [0; 4];
    for i in 0..4 {
        for j in 0..4 {
            for (k, slot) in out.iter_mut().enumerate() {
                *slot += u[i] * v[j] * c[i][j][k];
            }
        }
    }
    out
}

/// `2 ∇_{e_i} e_j`
fn nabla2(c: &C, i: usize, j: usize) -> V {
    std::array::from_fn(|k| c[i][j][k] - c[j][k][i] + c[k][i][j])
}

fn basis(i: usize) -> V {
    let mut v = [0; 4];
    v[i] = 1;
    v
}

fn j_apply(k: u8, v: V) -> V {
    match k {
        1 => [-v[1], v[0], -v[3], v[2]],
        _ => [-v[1], v[0], v[3], -v[2]],
    }
}

/// `2 δJ`
fn divergence2(c: &C, k: u8) -> V {
    (0..4).fold([0; 4], |acc, i| {
        let je = j_apply(k, basis(i));
        let along: V = (0..4).fold([0; 4], |s, m| add(s, nabla2(c, i, m).map(|x| x * je[m])));
        add(acc, sub(along, j_apply(k, nabla2(c, i, i))))
    })
}

fn nijenhuis(c: &C, k: u8, u: V, v: V) -> V {
    let (ju, jv) = (j_apply(k, u), j_apply(k, v));
    let s = add(add(bracket(c, u, v), j_apply(k, bracket(c, ju, v))), j_apply(k, bracket(c, u, jv)));
    sub(s, bracket(c, ju, jv))
}

fn jacobi_ok(c: &C) -> bool {
    (0..4).all(|i| {
        (0..4).all(|j| {
            (0..4).all(|k| {
                let (a, b, e) = (basis(i), basis(j), basis(k));
                let s = add(
                    add(bracket(c, a, bracket(c, b, e)), bracket(c, b, bracket(c, e, a))),
                    bracket(c, e, bracket(c, a, b)),
                );
                s == [0; 4]
            })
        })
    })
}

fn rv(v: V) -> FrameVector<Rational> {
    FrameVector::from_coords(v.map(|x| int(x as i64)))
}

fn doubled(v: &FrameVector<Rational>) -> FrameVector<Rational> {
    v.scale(&int(2))
}

fn schema(p: [i128; 14]) -> SchemaParams<Rational> {
    let mut s = SchemaParams::zero();
    for (k, v) in SchemaParams::<Rational>::KEYS.iter().zip(p) {
        *s.get_mut(k).unwrap() = int(v as i64);
    }
    s
}

fn check_against_oracle(c: &C, alg: &LieAlgebra4<Rational>) {
    let geo = Geometry::new(alg);
    let conn = geo.connection();
    for i in Frame::ALL {
        for j in Frame::ALL {
            assert_eq!(doubled(conn.get(i, j)), rv(nabla2(c, i.index(), j.index())), "∇_{i}{j}");
        }
    }
    assert_eq!(alg.is_lie_algebra(), jacobi_ok(c));

    let (zz, ww) = (nabla2(c, Z, Z), nabla2(c, W, W));
    let zw = add(nabla2(c, Z, W), nabla2(c, W, Z));
    assert_eq!(geo.is_minimal(), horizontal(add(zz, ww)) == [0; 4]);
    assert_eq!(
        geo.is_totally_geodesic(),
        horizontal(zz) == [0; 4] && horizontal(ww) == [0; 4] && horizontal(zw) == [0; 4]
    );
    let (xx, yy) = (vertical(nabla2(c, X, X)), vertical(nabla2(c, Y, Y)));
    let xy = vertical(add(nabla2(c, X, Y), nabla2(c, Y, X)));
    let conformal = xx == yy && xy == [0; 4];
    assert_eq!(geo.is_conformal(), conformal);
    if conformal {
        assert_eq!(doubled(&geo.conformal_vector().unwrap()), rv(xx));
        assert_eq!(geo.is_riemannian().unwrap(), xx == [0; 4]);
    }
    assert_eq!(geo.is_horizontally_integrable(), vertical(c[X][Y]) == [0; 4]);

    let shape = geo.shape_forms();
    let diff = sub(zz, ww);
    let expected = [diff[X], diff[Y], zw[X], zw[Y]].map(|x| int(x as i64));
    assert_eq!([shape.alpha_x, shape.alpha_y, shape.beta_x, shape.beta_y], expected);

    for (idx, k) in [(1, Structure::J1), (2, Structure::J2)] {
        assert_eq!(doubled(&geo.divergence_j(k)), rv(divergence2(c, idx)), "δ{k}");
        let table = geo.nijenhuis(k);
        for i in Frame::ALL {
            for j in Frame::ALL {
                let want = nijenhuis(c, idx, basis(i.index()), basis(j.index()));
                assert_eq!(table.get(i, j), &rv(want), "N_{k}({i},{j})");
            }
        }
    }
}

fn small() -> impl Strategy<Value = i128> {
    -4i128..=4
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(192))]

    #[test]
    fn schema_pipeline_matches_oracle(p in prop::array::uniform14(small())) {
        let alg = LieAlgebra4::from_schema(&schema(p));
        check_against_oracle(&constants(p), &alg);
    }

    #[test]
    fn general_tables_match_oracle(upper in prop::array::uniform6(prop::array::uniform4(small()))) {
        let pairs = [(X, Y), (X, Z), (X, W), (Y, Z), (Y, W), (Z, W)];
        let mut c: C = [[[0; 4]; 4]; 4];
        for (&(i, j), v) in pairs.iter().zip(upper) {
            c[i][j] = v;
            c[j][i] = neg(v);
        }
        let alg = LieAlgebra4::from_upper(upper.map(rv));
        check_against_oracle(&c, &alg);
    }
}

#[test]
fn oracle_agrees_with_lemma_forms() {
    // δJ1 = −(θ1−2a)Z − (θ2+2α)W and δJ2 = −(θ1+2a)Z + (2α−θ2)W
    let p = [3, 2, -1, 1, 4, -2, 1, -3, 2, 0, 1, 2, 5, -4];
    let c = constants(p);
    let (alpha, a, t1, t2) = (p[1], p[3], p[12], p[13]);
    assert_eq!(divergence2(&c, 1), [0, 0, -2 * (t1 - 2 * a), -2 * (t2 + 2 * alpha)]);
    assert_eq!(divergence2(&c, 2), [0, 0, -2 * (t1 + 2 * a), 2 * (2 * alpha - t2)]);
}

fn lcm(a: i64, b: i64) -> i64 {
    let gcd = |mut x: i64, mut y: i64| {
        while y != 0 {
            (x, y) = (y, x % y);
        }
        x
    };
    a / gcd(a, b) * b
}

fn family_int(name: FamilyName, values: &[i64]) -> FamilyParams<Rational> {
    let mut it = values.iter();
    FamilyParams::from_fn(name, |_| int(*it.next().unwrap()))
}

/// Scaling every bracket by a constant preserves Jacobi and scales the
/// connection linearly, so denominators are cleared before the comparison.
#[test]
fn families_are_lie_algebras_by_oracle() {
    let samples: [(FamilyName, &[i64]); 6] = [
        (FamilyName::G5, &[1, 2, 3, -1, 2]),
        (FamilyName::G5, &[0, 1, 1, 4, -2]),
        (FamilyName::G18, &[2, -1, 3, 1, 0, 0]),
        (FamilyName::G18, &[-1, 2, 0, 4, 2, -3]),
        (FamilyName::G20, &[1, -2, 1, 0, 1]),
        (FamilyName::G20, &[-3, 1, 2, 4, -5]),
    ];
    for (name, values) in samples {
        let alg = build_family(&family_int(name, values)).unwrap();
        let s = alg.to_schema_params().unwrap();
        let scale = SchemaParams::<Rational>::KEYS
            .iter()
            .fold(1, |acc, k| lcm(acc, s.get(k).unwrap().denom().try_into().unwrap()));
        let raw: [i128; 14] = SchemaParams::<Rational>::KEYS.map(|k| {
            let v = s.get(k).unwrap().clone() * int(scale);
            v.to_integer().try_into().unwrap()
        });
        let c = constants(raw);
        assert!(jacobi_ok(&c), "{name:?} {values:?}");
        check_against_oracle(&c, &alg.map(|x| x.clone() * int(scale)));
    }
}

#[test]
fn abelian_is_flat() {
    let alg = LieAlgebra4::<Rational>::abelian();
    check_against_oracle(&[[[0; 4]; 4]; 4], &alg);
    assert!(Geometry::new(&alg).divergence_j(Structure::J1).is_zero());
}
