//! Buchberger's algorithm over ℚ in `ℚ[c1, c2, c3]`, with normal forms,
//! ideal comparison and Hilbert-function counts of the quotient.

use std::collections::BTreeSet;

use num_traits::One;
use serde::Serialize;
use thiserror::Error;

use crate::mpoly::{MPoly, Monomial, Var};
use crate::scalars::Rational;

pub type QPoly = MPoly<Rational>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("generator {index} involves variables other than c1, c2, c3")]
    ForeignVariable { index: usize },
    #[error("generator {index} is not weighted-homogeneous")]
    NotHomogeneous { index: usize },
}

/// Generators of a weighted-homogeneous ideal of `ℚ[c1, c2, c3]`.
#[derive(Clone, Debug, PartialEq)]
pub struct IdealBasis {
    generators: Vec<QPoly>,
}

impl IdealBasis {
    /// Zero generators are dropped.
    pub fn new(generators: impl IntoIterator<Item = QPoly>) -> Result<Self, GroebnerError> {
        let mut kept = Vec::new();
        for (index, g) in generators.into_iter().enumerate() {
            if g.is_zero() {
                continue;
            }
            if !g.uses_only(&Var::CHERN) {
                return Err(GroebnerError::ForeignVariable { index });
            }
            if g.homogeneous_weight().is_none() {
                return Err(GroebnerError::NotHomogeneous { index });
            }
            kept.push(g);
        }
        Ok(IdealBasis { generators: kept })
    }

    pub fn generators(&self) -> &[QPoly] {
        &self.generators
    }
}

/// Reduced, monic Gröbner basis, sorted by ascending leading monomial.
#[derive(Clone, Debug, PartialEq)]
pub struct GroebnerBasis {
    polys: Vec<QPoly>,
}

impl GroebnerBasis {
    pub fn polys(&self) -> &[QPoly] {
        &self.polys
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.polys.iter().filter_map(MPoly::leading_monomial)
    }

    pub fn contains(&self, p: &QPoly) -> bool {
        normal_form(p, self).is_zero()
    }

    pub fn as_ideal(&self) -> IdealBasis {
        IdealBasis {
            generators: self.polys.clone(),
        }
    }
}

fn monic(p: QPoly) -> QPoly {
    match p.leading_term() {
        Some((_, c)) if !c.is_one() => {
            let inv = c.recip();
            p.scale(&inv)
        }
        _ => p,
    }
}

/// Full reduction of `p` by `divisors` (every term, not only the leading one).
fn reduce_by(p: &QPoly, divisors: &[QPoly]) -> QPoly {
    let mut rest = p.clone();
    let mut remainder = QPoly::zero();
    while let Some((m, c)) = rest.leading_term() {
        let (m, c) = (m.clone(), c.clone());
        let divisor = divisors.iter().find_map(|g| {
            let (lm, lc) = g.leading_term()?;
            lm.quotient_of(&m).map(|q| (g, q, lc))
        });
        match divisor {
            Some((g, q, lc)) => {
                let factor = &c / lc;
                rest = &rest - &g.mul_term(&factor, &q);
            }
            None => {
                let t = QPoly::term(c, m);
                rest = &rest - &t;
                remainder = &remainder + &t;
            }
        }
    }
    remainder
}

fn s_polynomial(f: &QPoly, g: &QPoly) -> QPoly {
    let (fm, fc) = f.leading_term().expect("nonzero");
    let (gm, gc) = g.leading_term().expect("nonzero");
    let lcm = fm.lcm(gm);
    let uf = fm.quotient_of(&lcm).unwrap();
    let ug = gm.quotient_of(&lcm).unwrap();
    &f.mul_term(&fc.recip(), &uf) - &g.mul_term(&gc.recip(), &ug)
}

/// Reduced Gröbner basis of `ideal` under the weighted grevlex order.
///
/// Pairs are taken by the normal strategy (smallest lcm first); the product
/// and chain criteria discard pairs whose S-polynomial is known to reduce to
/// zero.
pub fn buchberger(ideal: &IdealBasis) -> GroebnerBasis {
    let mut basis: Vec<QPoly> = Vec::new();
    let mut pairs: BTreeSet<(usize, usize)> = BTreeSet::new();

    let add = |basis: &mut Vec<QPoly>, pairs: &mut BTreeSet<(usize, usize)>, p: QPoly| {
        let j = basis.len();
        basis.push(monic(p));
        for i in 0..j {
            pairs.insert((i, j));
        }
    };

    for g in ideal.generators() {
        let r = reduce_by(g, &basis);
        if !r.is_zero() {
            add(&mut basis, &mut pairs, r);
        }
    }

    let lcm_of = |basis: &[QPoly], (i, j): (usize, usize)| {
        basis[i]
            .leading_monomial()
            .unwrap()
            .lcm(basis[j].leading_monomial().unwrap())
    };

    while let Some(&pair) = pairs
        .iter()
        .min_by(|&&a, &&b| lcm_of(&basis, a).cmp(&lcm_of(&basis, b)).then(a.cmp(&b)))
    {
        pairs.remove(&pair);
        let (i, j) = pair;
        let lmi = basis[i].leading_monomial().unwrap();
        let lmj = basis[j].leading_monomial().unwrap();
        if lmi.is_coprime(lmj) {
            continue;
        }
        let lcm = lmi.lcm(lmj);
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].leading_monomial().unwrap().divides(&lcm)
                && !pairs.contains(&key(i, k))
                && !pairs.contains(&key(j, k))
        });
        if chain {
            continue;
        }
        let r = reduce_by(&s_polynomial(&basis[i], &basis[j]), &basis);
        if !r.is_zero() {
            add(&mut basis, &mut pairs, r);
        }
    }

    interreduce(basis)
}

fn interreduce(basis: Vec<QPoly>) -> GroebnerBasis {
    // minimal basis: drop elements whose leading monomial is a multiple of another's
    let mut minimal: Vec<QPoly> = Vec::new();
    for (i, p) in basis.iter().enumerate() {
        let lm = p.leading_monomial().unwrap();
        let redundant = basis.iter().enumerate().any(|(k, q)| {
            let lq = q.leading_monomial().unwrap();
            k != i && lq.divides(lm) && (lq != lm || k < i)
        });
        if !redundant {
            minimal.push(p.clone());
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<QPoly> = minimal
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i)
            .map(|(_, q)| q.clone())
            .collect();
        let (lm, lc) = minimal[i].leading_term().unwrap();
        let head = QPoly::term(lc.clone(), lm.clone());
        let tail = reduce_by(&(&minimal[i] - &head), &others);
        reduced.push(monic(&head + &tail));
    }
    reduced.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));
    GroebnerBasis { polys: reduced }
}

/// Remainder of `p` on division by `g`; zero exactly when `p` lies in the ideal.
pub fn normal_form(p: &QPoly, g: &GroebnerBasis) -> QPoly {
    reduce_by(p, &g.polys)
}

pub fn ideal_equal(i: &IdealBasis, j: &IdealBasis) -> bool {
    let gi = buchberger(i);
    let gj = buchberger(j);
    i.generators().iter().all(|p| gj.contains(p)) && j.generators().iter().all(|p| gi.contains(p))
}

/// Monomials `c1^a c2^b c3^c` of weight exactly `w`.
pub fn chern_monomials(w: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for c in 0..=w / 3 {
        for b in 0..=(w - 3 * c) / 2 {
            out.push(Monomial::chern(w - 3 * c - 2 * b, b, c));
        }
    }
    out
}

/// Dimension of each weight-`w` piece of `ℚ[c1,c2,c3]/(G)` for `w = 0..=up_to`,
/// counted as the standard monomials of that weight.
pub fn graded_dimensions(g: &GroebnerBasis, up_to: u32) -> Vec<usize> {
    let leads: Vec<&Monomial> = g.leading_monomials().collect();
    (0..=up_to)
        .map(|w| {
            chern_monomials(w)
                .iter()
                .filter(|m| !leads.iter().any(|l| l.divides(m)))
                .count()
        })
        .collect()
}

/// A target quotient ring: its defining ideal and the expected dimensions of
/// its graded pieces in weights `0..expected_dims.len()`.
#[derive(Clone, Debug)]
pub struct RingPresentation {
    pub target: IdealBasis,
    pub expected_dims: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PresentationReport {
    pub d: u64,
    pub ideal_equal: bool,
    pub graded_dims: Vec<usize>,
    pub expected: Vec<usize>,
    pub pass: bool,
}

/// Compare the relation ideal `ideal` (computed at degree `d`) with `target`.
pub fn verify_presentation(d: u64, ideal: &IdealBasis, target: &RingPresentation) -> PresentationReport {
    let equal = ideal_equal(ideal, &target.target);
    let up_to = target.expected_dims.len().saturating_sub(1) as u32;
    let graded_dims = if target.expected_dims.is_empty() {
        Vec::new()
    } else {
        graded_dimensions(&buchberger(ideal), up_to)
    };
    let pass = equal && graded_dims == target.expected_dims;
    PresentationReport {
        d,
        ideal_equal: equal,
        graded_dims,
        expected: target.expected_dims.clone(),
        pass,
    }
}
