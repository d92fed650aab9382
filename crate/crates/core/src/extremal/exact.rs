//! Exact energies for forests whose squared eigenvalues are all integers.
//!
//! The nonzero eigenvalues of a forest are `±sqrt(y_i)` where the `y_i` are
//! the roots of `sum_k (-1)^k b_k y^(K-k)`. When rounding the computed `λ_i^2`
//! to integers reproduces that polynomial exactly, the energy is
//! `2 * sum_i sqrt(y_i)`. Writing each `y_i = c^2 s` with `s` squarefree gives
//! a normal form that decides equality exactly, since square roots of
//! distinct squarefree integers are linearly independent over the rationals.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::charpoly::CoeffVector;

/// Energy `2 * sum_s c_s * sqrt(s)` over squarefree `s`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExactEnergy {
    terms: BTreeMap<u64, u64>,
}

impl ExactEnergy {
    pub fn value(&self) -> f64 {
        2.0 * self
            .terms
            .iter()
            .map(|(&s, &c)| c as f64 * (s as f64).sqrt())
            .sum::<f64>()
    }

    /// Pairs `(s, c)` with `s` squarefree.
    pub fn terms(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.terms.iter().map(|(&s, &c)| (s, c))
    }
}

/// Attempts the certificate from the coefficients and the computed spectrum.
pub fn certify(c: &CoeffVector, eigenvalues: &[f64]) -> Option<ExactEnergy> {
    let top = c.matching_number();
    let mut positive: Vec<f64> = eigenvalues.to_vec();
    positive.sort_by(|a, b| b.total_cmp(a));
    positive.truncate(top);
    if positive.len() != top {
        return None;
    }

    let mut roots = Vec::with_capacity(top);
    for lambda in positive {
        let sq = lambda * lambda;
        if !(0.5..9.0e15).contains(&sq) {
            return None;
        }
        let y = sq.round();
        if (sq - y).abs() > 1e-6 * (1.0 + y) {
            return None;
        }
        roots.push(y as u64);
    }

    // prod_i (y - y_i): coefficient of y^(K-j) is (-1)^j e_j
    let mut elementary: Vec<BigInt> = vec![BigInt::one()];
    for &r in &roots {
        let mut next = vec![BigInt::zero(); elementary.len() + 1];
        for (j, e) in elementary.iter().enumerate() {
            next[j] += e;
            next[j + 1] += e * BigInt::from(r);
        }
        elementary = next;
    }
    for (j, e) in elementary.iter().enumerate() {
        if BigInt::from(BigUint::clone(c.get(j))) != *e {
            return None;
        }
    }

    let mut terms = BTreeMap::new();
    for y in roots {
        let (c, s) = square_part(y);
        *terms.entry(s).or_insert(0) += c;
    }
    Some(ExactEnergy { terms })
}

/// `y = c^2 * s` with `s` squarefree.
fn square_part(mut y: u64) -> (u64, u64) {
    let mut c = 1;
    let mut s = 1;
    let mut p = 2;
    while p * p <= y {
        let mut e = 0;
        while y.is_multiple_of(p) {
            y /= p;
            e += 1;
        }
        c *= p.pow(e / 2);
        if e % 2 == 1 {
            s *= p;
        }
        p += 1;
    }
    (c, s * y)
}
