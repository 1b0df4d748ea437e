use serde::Serialize;

use crate::scalars::{eval_at, int, interpolate, rat, Rational, UniPoly};
use crate::symmetric::decompose_weight3;

use super::tautological::hodge_product;
use super::{d_rat, serialize_rational, TheoremError};

/// Degree bound for `A, B, C` as polynomials in `d`.
pub const INTERPOLATION_DEGREE: usize = 9;

/// Coordinates of `λ3` in the basis `Σ t_i^3`, `t1 t2 t3`, `Σ t_i^2 t_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AbcRow {
    pub d: u64,
    #[serde(serialize_with = "serialize_rational")]
    pub a: Rational,
    #[serde(serialize_with = "serialize_rational")]
    pub b: Rational,
    #[serde(serialize_with = "serialize_rational")]
    pub c: Rational,
}

impl AbcRow {
    pub fn values(&self) -> [Rational; 3] {
        [self.a.clone(), self.b.clone(), self.c.clone()]
    }
}

pub fn abc_row(d: u64) -> AbcRow {
    let top = hodge_product(d, 3).graded_part(3);
    let s = decompose_weight3(&top).expect("the Hodge product is symmetric");
    AbcRow {
        d,
        a: s.a,
        b: s.b,
        c: s.c,
    }
}

pub fn abc_table(from: u64, to: u64) -> Result<Vec<AbcRow>, TheoremError> {
    if from < 4 || from > to {
        return Err(TheoremError::TableRange { from, to });
    }
    Ok((from..=to).map(abc_row).collect())
}

pub fn abc_csv(rows: &[AbcRow]) -> String {
    let mut out = String::from("d,A,B,C\n");
    for r in rows {
        out.push_str(&format!("{},{},{},{}\n", r.d, r.a, r.b, r.c));
    }
    out
}

fn fac(k: i64, factors: &[&[i64]]) -> UniPoly {
    factors
        .iter()
        .fold(UniPoly::constant(int(k)), |acc, f| acc * UniPoly::from_descending(f))
}

/// `A(d), B(d), C(d)` expanded from their factored closed forms.
pub fn published_abc() -> [UniPoly; 3] {
    const DP1: &[i64] = &[1, 1];
    const D: &[i64] = &[1, 0];
    const DM1: &[i64] = &[1, -1];
    const DM2: &[i64] = &[1, -2];
    const DM3: &[i64] = &[1, -3];
    let a = fac(-1, &[DP1, D, DM1, DM2, DM3, &[5, -20, -5, 50, -12]]).scale(&rat(1, 6480));
    let b = fac(-1, &[D, DM1, DM2, DM3, &[10, -30, -5, -45, -14, -24]]).scale(&rat(1, 2160));
    let c = fac(-1, &[DP1, D, DM1, DM2, DM3, &[5, -20, 10, -10, 6]]).scale(&rat(1, 2160));
    [a, b, c]
}

#[derive(Clone, Debug, PartialEq)]
pub struct Extrapolation {
    pub d: u64,
    pub predicted: [Rational; 3],
    pub computed: [Rational; 3],
}

impl Extrapolation {
    pub fn agrees(&self) -> bool {
        self.predicted == self.computed
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ClosedForms {
    pub interpolants: [UniPoly; 3],
    pub published: [UniPoly; 3],
    pub extrapolation: Vec<Extrapolation>,
}

impl ClosedForms {
    pub fn matches(&self) -> [bool; 3] {
        [0, 1, 2].map(|i| self.interpolants[i] == self.published[i])
    }

    pub fn pass(&self) -> bool {
        self.matches().iter().all(|&m| m) && self.extrapolation.iter().all(Extrapolation::agrees)
    }
}

/// Interpolate `A, B, C` through `d = 4..=20`, then predict `d = 21..=25`.
pub fn abc_closed_forms() -> Result<ClosedForms, TheoremError> {
    let rows = abc_table(4, 20)?;
    let mut interpolants = Vec::with_capacity(3);
    for i in 0..3 {
        let points: Vec<_> = rows.iter().map(|r| (d_rat(r.d), r.values()[i].clone())).collect();
        interpolants.push(interpolate(&points, INTERPOLATION_DEGREE)?);
    }
    let interpolants: [UniPoly; 3] = interpolants.try_into().expect("three columns");
    let extrapolation = abc_table(21, 25)?
        .into_iter()
        .map(|r| Extrapolation {
            d: r.d,
            predicted: interpolants.clone().map(|p| eval_at(&p, &d_rat(r.d))),
            computed: r.values(),
        })
        .collect();
    Ok(ClosedForms {
        interpolants,
        published: published_abc(),
        extrapolation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rows() {
        assert_eq!(abc_row(4).values(), [int(-2), int(-16), int(-7)]);
        assert_eq!(abc_row(13).values(), [int(-3657654), int(-22540804), int(-11170159)]);
        assert_eq!(
            abc_row(20).values(),
            [int(-240791978), int(-1461127968), int(-727822683)]
        );
        assert_eq!(abc_csv(&abc_table(4, 4).unwrap()), "d,A,B,C\n4,-2,-16,-7\n");
    }

    #[test]
    fn ranges() {
        assert_eq!(abc_table(3, 5), Err(TheoremError::TableRange { from: 3, to: 5 }));
        assert_eq!(abc_table(6, 5), Err(TheoremError::TableRange { from: 6, to: 5 }));
    }

    #[test]
    fn published_values() {
        let [a, b, c] = published_abc();
        assert_eq!(eval_at(&a, &int(5)), int(-82));
        assert_eq!(eval_at(&b, &int(4)), int(-16));
        assert_eq!(eval_at(&c, &int(6)), int(-2877));
        assert_eq!(a.degree(), Some(9));
        assert_eq!(b.degree(), Some(9));
    }

    #[test]
    fn closed_forms() {
        let cf = abc_closed_forms().unwrap();
        assert_eq!(cf.matches(), [true, true, true]);
        assert_eq!(cf.extrapolation.len(), 5);
        assert!(cf.pass());
        assert_eq!(eval_at(&cf.interpolants[0], &int(5)), int(-82));
    }

    #[test]
    fn json_row() {
        let v = serde_json::to_string(&abc_row(4)).unwrap();
        assert_eq!(v, r#"{"d":4,"a":-2,"b":-16,"c":-7}"#);
    }
}
