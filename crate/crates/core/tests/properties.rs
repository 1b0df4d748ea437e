use chowcalc_core::dsl::{evaluate, parse, Mode, Value};
use chowcalc_core::groebner::{buchberger, chern_monomials, graded_dimensions, IdealBasis, QPoly};
use chowcalc_core::scalars::{int, rat, Rational, UniPoly};
use chowcalc_core::symmetric::{decompose_weight3, monomial_symmetric, SymDecomposition};
use chowcalc_core::theorems::{delta_pullback, free_dims, r_nodal, r_smooth};
use chowcalc_core::{MPoly, Monomial, Var};
use proptest::prelude::*;

fn arb_poly() -> impl Strategy<Value = QPoly> {
    prop::collection::vec(
        (
            -9i64..=9,
            1i64..4,
            [0u32..3, 0u32..2, 0u32..2, 0u32..3, 0u32..2, 0u32..2, 0u32..2],
        ),
        0..6,
    )
    .prop_map(|ts| QPoly::from_terms(ts.into_iter().map(|(n, d, e)| (rat(n, d), Monomial::from_exps(e)))))
}

/// A nonzero weighted-homogeneous Chern polynomial of weight `w`.
fn arb_homogeneous() -> impl Strategy<Value = QPoly> {
    (1u32..=4)
        .prop_flat_map(|w| {
            let n = chern_monomials(w).len();
            (Just(w), prop::collection::vec(-3i64..=3, n))
        })
        .prop_filter_map("zero", |(w, ks)| {
            let p = QPoly::from_terms(chern_monomials(w).into_iter().zip(ks).map(|(m, k)| (int(k), m)));
            (!p.is_zero()).then_some(p)
        })
}

proptest! {
    #[test]
    fn truncated_product_matches_full_product(p in arb_poly(), q in arb_poly(), w in 0u32..8) {
        prop_assert_eq!(p.mul_truncated(&q, w), (&p * &q).truncate(w));
    }

    #[test]
    fn graded_parts_sum_to_whole(p in arb_poly()) {
        let top = p.max_weight().unwrap_or(0);
        let sum = (0..=top).fold(QPoly::zero(), |acc, w| &acc + &p.graded_part(w));
        prop_assert_eq!(sum, p.clone());
        for w in 0..=top {
            let part = p.graded_part(w);
            prop_assert!(part.is_zero() || part.homogeneous_weight() == Some(w));
        }
    }

    #[test]
    fn principal_ideal_dims(f in arb_homogeneous()) {
        // a nonzero f is a nonzerodivisor, so dim (R/f)_n = dim R_n - dim R_(n-w)
        let w = f.homogeneous_weight().unwrap() as usize;
        let g = buchberger(&IdealBasis::new([f]).unwrap());
        let free = free_dims(&[1, 2, 3], 10);
        let expected: Vec<usize> = (0..=10).map(|n| free[n] - if n >= w { free[n - w] } else { 0 }).collect();
        prop_assert_eq!(graded_dimensions(&g, 10), expected);
    }

    #[test]
    fn weight_three_coordinates_round_trip(a in -50i64..50, b in -50i64..50, c in -50i64..50) {
        let s = SymDecomposition { a: int(a), b: int(b), c: int(c) };
        let p = s.reconstruct();
        prop_assert_eq!(decompose_weight3(&p).unwrap(), s);
    }

    #[test]
    fn substitution_is_a_homomorphism(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
        let bind = [(Var::C1, r.clone()), (Var::H, &r + &QPoly::one())];
        prop_assert_eq!((&p * &q).substitute(&bind), &p.substitute(&bind) * &q.substitute(&bind));
        prop_assert_eq!((&p + &q).substitute(&bind), &p.substitute(&bind) + &q.substitute(&bind));
    }
}

#[test]
fn generic_and_specific_agree_for_small_degrees() {
    let g = UniPoly::d();
    let generic: Vec<_> = (0..3).map(|y| (r_smooth(y, &g), r_nodal(y, &g))).collect();
    for d in 1..=30i64 {
        let q = int(d);
        for (y, (s, n)) in generic.iter().enumerate() {
            assert_eq!(s.eval_at(&q), r_smooth(y as u32, &q), "smooth y={y} d={d}");
            assert_eq!(n.eval_at(&q), r_nodal(y as u32, &q), "nodal y={y} d={d}");
        }
        assert_eq!(delta_pullback(&g).eval_at(&q), delta_pullback(&q));
    }
}

#[test]
fn expressions_agree_with_relation_maps() {
    for y in 0..3u32 {
        let src = format!("push(h^{y} * nodal_divisor() * euler_twist(d - 1))");
        let e = parse(&src).unwrap();
        assert_eq!(
            evaluate(&e, &Mode::Generic).unwrap(),
            Value::Generic(r_nodal(y, &UniPoly::d()))
        );
        for d in [1i64, 4, 9] {
            assert_eq!(
                evaluate(&e, &Mode::At(int(d))).unwrap(),
                Value::Specific(r_nodal(y, &int(d)))
            );
        }
    }
    let half = Rational::new(1.into(), 2.into());
    let e = parse("push(h^2 * euler_twist(d - 1))").unwrap();
    assert_eq!(
        evaluate(&e, &Mode::At(half.clone())).unwrap(),
        Value::Specific(r_smooth(2, &half))
    );
}

#[test]
fn basis_of_weight_three_symmetric_polynomials() {
    let [m3, m111, m21] = monomial_symmetric::<Rational>();
    assert_eq!(m3.num_terms() + m111.num_terms() + m21.num_terms(), 10);
    let all: MPoly<Rational> = &(&m3 + &m111) + &m21;
    let h3 = (0..=3u32)
        .flat_map(|a| (0..=3 - a).map(move |b| Monomial::roots(a, b, 3 - a - b)))
        .fold(QPoly::zero(), |acc, m| &acc + &QPoly::term(int(1), m));
    assert_eq!(all, h3);
}
