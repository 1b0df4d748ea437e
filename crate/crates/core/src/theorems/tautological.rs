use num_bigint::BigInt;
use serde::Serialize;

use crate::groebner::{buchberger, normal_form, GroebnerBasis, QPoly};
use crate::mpoly::{Monomial, Var};
use crate::scalars::{eval_at, int, rat, Rational, UniPoly};
use crate::symmetric::{chern_roots_product, decompose_weight3, sym_to_chern};

use super::relations::{delta_pullback, nodal_relations};
use super::{check_degree, d_rat, serialize_abc, TheoremError};

/// Compositions `x + y + z = d` with all parts at least 1, in lexicographic
/// order.
pub fn compositions(d: u64) -> Vec<[u64; 3]> {
    let mut out = Vec::new();
    for x in 1..d {
        for y in 1..d - x {
            out.push([x, y, d - x - y]);
        }
    }
    out
}

/// Total Chern class of the Hodge bundle pulled back to the equivariant
/// Chow ring of a point, in the Chern roots, up to weight `max_weight`.
pub fn hodge_product(d: u64, max_weight: u32) -> QPoly {
    let forms: Vec<[Rational; 3]> = compositions(d).into_iter().map(|c| c.map(d_rat)).collect();
    chern_roots_product(&forms, max_weight)
}

pub fn genus(d: u64) -> u64 {
    if d < 2 {
        0
    } else {
        (d - 1) * (d - 2) / 2
    }
}

pub fn binomial3(d: u64) -> Rational {
    Rational::from_integer(num_integer::binomial(BigInt::from(d), BigInt::from(3)))
}

/// `(N, D)` with `λ3 = (N(d) / D(d)) c1^3` in the nodal Chow ring for
/// `d ≥ 4`.
pub fn lambda3_closed_form() -> (UniPoly, UniPoly) {
    let d = UniPoly::d();
    let octic = UniPoly::from_descending(&[5, -60, 305, -855, 1430, -1425, 816, -288, 216]);
    let numerator = -(d.pow(2) * UniPoly::d_minus(1) * UniPoly::d_minus(2) * octic);
    let denominator = UniPoly::d_minus(3).scale(&int(6480)) * UniPoly::from_descending(&[1, -3, 3]);
    (numerator, denominator)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LambdaChecks {
    pub delta: bool,
    pub lambda1: bool,
    pub lambda2: bool,
    pub lambda3: bool,
    pub lambda3_cross_multiplied: Option<bool>,
    pub mumford: Option<bool>,
}

impl LambdaChecks {
    pub fn pass(&self) -> bool {
        self.delta
            && self.lambda1
            && self.lambda2
            && self.lambda3
            && self.lambda3_cross_multiplied != Some(false)
            && self.mumford != Some(false)
    }
}

/// Pullbacks of `δ, λ1, λ2, λ3` at one degree. The `*_reduced` fields are
/// normal forms modulo the nodal relation ideal.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TautologicalReport {
    pub d: u64,
    pub genus: u64,
    pub delta: QPoly,
    pub lambda1: QPoly,
    pub lambda2: QPoly,
    pub lambda3: QPoly,
    pub lambda1_reduced: QPoly,
    pub lambda2_reduced: QPoly,
    pub lambda3_reduced: QPoly,
    #[serde(serialize_with = "serialize_abc")]
    pub abc: Option<[Rational; 3]>,
    pub checks: LambdaChecks,
    pub pass: bool,
}

fn c1_power(k: Rational, e: u32) -> QPoly {
    QPoly::term(k, Monomial::power(Var::C1, e))
}

fn raw_lambdas(total: &QPoly) -> [QPoly; 3] {
    [1, 2, 3].map(|w| sym_to_chern(&total.graded_part(w)).expect("the Hodge product is symmetric"))
}

fn nodal_basis(d: u64) -> GroebnerBasis {
    buchberger(&nodal_relations(d))
}

fn mumford_holds(lambda: &[QPoly; 3], g: &GroebnerBasis) -> bool {
    let diff = &lambda[0].pow(2) - &lambda[1].scale(&int(2));
    normal_form(&diff, g).is_zero()
}

pub fn lambda_classes(d: u64) -> Result<TautologicalReport, TheoremError> {
    check_degree(d)?;
    let dq = d_rat(d);
    let total = hodge_product(d, 3);
    let lambda = raw_lambdas(&total);
    let g = nodal_basis(d);
    let reduced = lambda.clone().map(|l| normal_form(&l, &g));

    let delta = delta_pullback(&dq);
    let dm1 = &dq - &int(1);
    let delta_ok = delta == c1_power(-(&dq * &dm1 * &dm1), 1);
    let binom = binomial3(d);
    let lambda1_ok = lambda[0] == c1_power(-binom.clone(), 1);

    let (lambda2_ok, lambda3_ok, cross, mumford, abc) = if d >= 4 {
        let half_square = &binom * &binom * rat(1, 2);
        let l2 = normal_form(&(&lambda[1] - &c1_power(half_square, 2)), &g).is_zero();
        let (num, den) = lambda3_closed_form();
        let (n, dd) = (eval_at(&num, &dq), eval_at(&den, &dq));
        let direct = normal_form(&(&lambda[2] - &c1_power(&n / &dd, 3)), &g).is_zero();
        let cleared = &lambda[2].scale(&dd) - &c1_power(n, 3);
        let cross = normal_form(&cleared, &g).is_zero();
        let abc = decompose_weight3(&total.graded_part(3)).expect("the Hodge product is symmetric");
        (
            l2,
            direct,
            Some(cross),
            Some(mumford_holds(&lambda, &g)),
            Some([abc.a, abc.b, abc.c]),
        )
    } else {
        (lambda[1].is_zero(), lambda[2].is_zero(), None, None, None)
    };

    let checks = LambdaChecks {
        delta: delta_ok,
        lambda1: lambda1_ok,
        lambda2: lambda2_ok,
        lambda3: lambda3_ok,
        lambda3_cross_multiplied: cross,
        mumford,
    };
    let [lambda1, lambda2, lambda3] = lambda;
    let [lambda1_reduced, lambda2_reduced, lambda3_reduced] = reduced;
    Ok(TautologicalReport {
        d,
        genus: genus(d),
        delta,
        lambda1,
        lambda2,
        lambda3,
        lambda1_reduced,
        lambda2_reduced,
        lambda3_reduced,
        abc,
        pass: checks.pass(),
        checks,
    })
}

/// `λ1^2 = 2 λ2` in the nodal Chow ring.
pub fn mumford_check(d: u64) -> Result<bool, TheoremError> {
    if d < 4 {
        return Err(TheoremError::MumfordRange(d));
    }
    Ok(mumford_holds(&raw_lambdas(&hodge_product(d, 3)), &nodal_basis(d)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpoly::MPoly;

    #[test]
    fn composition_order() {
        assert_eq!(compositions(2), Vec::<[u64; 3]>::new());
        assert_eq!(compositions(3), vec![[1, 1, 1]]);
        assert_eq!(compositions(4), vec![[1, 1, 2], [1, 2, 1], [2, 1, 1]]);
        for d in 3..15u64 {
            let cs = compositions(d);
            assert_eq!(cs.len() as u64, (d - 1) * (d - 2) / 2);
            // each part sums to d * C(d-1, 2) / 3 over all compositions
            let sum_x: u64 = cs.iter().map(|c| c[0]).sum();
            assert_eq!(int(sum_x as i64), binomial3(d));
        }
    }

    #[test]
    fn small_products() {
        assert_eq!(hodge_product(2, 3), QPoly::one());
        let [e1, _, _] = crate::symmetric::elementary::<Rational>();
        assert_eq!(hodge_product(3, 3), &QPoly::one() - &e1);
        assert_eq!(hodge_product(4, 3).graded_part(1), e1.scale(&int(-4)));
    }

    #[test]
    fn low_degrees() {
        let r = lambda_classes(2).unwrap();
        assert!(r.lambda1.is_zero() && r.lambda2.is_zero() && r.lambda3.is_zero());
        assert_eq!(r.delta, MPoly::var(Var::C1).scale(&int(-2)));
        assert!(r.pass);
        let r = lambda_classes(3).unwrap();
        assert_eq!(r.lambda1, -MPoly::var(Var::C1));
        assert!(r.lambda2.is_zero() && r.lambda3.is_zero());
        assert_eq!(r.abc, None);
        assert!(r.pass);
        assert!(lambda_classes(0).is_err());
    }

    #[test]
    fn quartics() {
        let r = lambda_classes(4).unwrap();
        assert_eq!(r.lambda1.to_string(), "-4*c1");
        assert_eq!(r.lambda3.to_string(), "-c3 - c1*c2 - 2*c1^3");
        assert_eq!(r.lambda2_reduced.to_string(), "8*c1^2");
        assert_eq!(r.lambda3_reduced.to_string(), "-80/7*c1^3");
        assert_eq!(r.abc, Some([int(-2), int(-16), int(-7)]));
        assert_eq!(r.genus, 3);
        assert!(r.pass, "{:?}", r.checks);
        let (n, dd) = lambda3_closed_form();
        assert_eq!(&eval_at(&n, &int(4)) / &eval_at(&dd, &int(4)), rat(-80, 7));
    }

    #[test]
    fn mumford() {
        for d in [4, 5, 12] {
            assert_eq!(mumford_check(d), Ok(true));
        }
        assert_eq!(mumford_check(3), Err(TheoremError::MumfordRange(3)));
    }

    #[test]
    fn report_json() {
        let v = serde_json::to_value(lambda_classes(4).unwrap()).unwrap();
        assert_eq!(v["abc"], serde_json::json!([-2, -16, -7]));
        assert_eq!(v["lambda3_reduced"], "-80/7*c1^3");
        assert_eq!(v["delta"], "-36*c1");
        assert_eq!(v["checks"]["mumford"], true);
        let v = serde_json::to_value(lambda_classes(3).unwrap()).unwrap();
        assert!(v["abc"].is_null());
        assert!(v["checks"]["mumford"].is_null());
    }
}
