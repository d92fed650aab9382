//! Exact coefficients of the characteristic polynomial of a weighted forest.
//!
//! For a forest on `n` vertices
//!
//! ```text
//! det(xI - A) = sum_k (-1)^k b_k x^(n-2k)
//! ```
//!
//! where `b_k` sums, over all `k`-edge matchings, the product of the squared
//! edge weights. [`coeffs`] computes the vector by repeatedly removing a
//! pendant vertex `v` (neighbour `u`, edge weight `w`) using
//! `b_k(G) = b_k(G - v) + w^2 b_{k-1}(G - v - u)`; [`coeffs_oracle`]
//! enumerates matchings directly.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::WeightedForest;

/// Default vertex bound for [`coeffs_oracle`].
pub const ORACLE_BOUND: usize = 16;

/// `(b_0, ..., b_{floor(n/2)})` for a forest of order `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoeffVector {
    n: usize,
    b: Vec<BigUint>,
}

impl CoeffVector {
    /// Pads or trims `b` to length `floor(n/2) + 1`. Fails when a dropped
    /// entry is nonzero or `b_0 != 1`.
    pub fn new(n: usize, mut b: Vec<BigUint>) -> Result<Self> {
        let len = n / 2 + 1;
        if b.first().is_none_or(|b0| !b0.is_one()) {
            return Err(Error::Parameter("b_0 must equal 1".into()));
        }
        if b.iter().skip(len).any(|x| !x.is_zero()) {
            return Err(Error::Parameter(format!(
                "more than {} coefficients for order {n}",
                len
            )));
        }
        b.resize(len, BigUint::zero());
        Ok(CoeffVector { n, b })
    }

    pub fn from_u64(n: usize, b: &[u64]) -> Result<Self> {
        CoeffVector::new(n, b.iter().map(|&x| BigUint::from(x)).collect())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn as_slice(&self) -> &[BigUint] {
        &self.b
    }

    pub fn len(&self) -> usize {
        self.b.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn get(&self, k: usize) -> &BigUint {
        &self.b[k]
    }

    /// Largest `k` with `b_k > 0`, i.e. the matching number.
    pub fn matching_number(&self) -> usize {
        self.b.iter().rposition(|x| !x.is_zero()).unwrap_or(0)
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.b.iter().map(|x| x.to_f64().unwrap_or(f64::INFINITY)).collect()
    }

    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.b.iter().map(|x| x.to_str_radix(10)).collect()
    }
}

impl Serialize for CoeffVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("CoeffVector", 2)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("b", &self.to_decimal_strings())?;
        st.end()
    }
}

type Poly = Vec<BigUint>;

fn poly_mul(a: &[BigUint], b: &[BigUint]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigUint::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

fn poly_add(a: &[BigUint], b: &[BigUint]) -> Poly {
    let mut out = vec![BigUint::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] += y;
    }
    out
}

/// Coefficients by pendant elimination, always removing the lowest-indexed
/// pendant vertex.
pub fn coeffs(forest: &WeightedForest) -> CoeffVector {
    coeffs_with_order(forest, |pendants| pendants[0])
}

/// Pendant elimination where `pick` chooses which of the current pendant
/// vertices (given in ascending order) to remove next.
///
/// Every vertex `x` carries two generating polynomials over the part of the
/// tree already folded into it: matchings leaving `x` free, and matchings
/// covering `x`. Folding a pendant `v` into its neighbour `u` is exactly the
/// deletion recurrence.
pub fn coeffs_with_order<P>(forest: &WeightedForest, mut pick: P) -> CoeffVector
where
    P: FnMut(&[usize]) -> usize,
{
    let n = forest.order();
    let adj = forest.adjacency();
    let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut alive = vec![true; n];
    let mut free: Vec<Poly> = vec![vec![BigUint::one()]; n];
    let mut covered: Vec<Poly> = vec![Vec::new(); n];

    loop {
        let pendants: Vec<usize> = (0..n).filter(|&x| alive[x] && deg[x] == 1).collect();
        if pendants.is_empty() {
            break;
        }
        let v = pick(&pendants);
        debug_assert!(alive[v] && deg[v] == 1);
        let &(u, w) = adj[v]
            .iter()
            .find(|&&(x, _)| alive[x])
            .expect("pendant has a live neighbour");

        let all_v = poly_add(&free[v], &covered[v]);
        let w2 = BigUint::from(w) * BigUint::from(w);
        // matchings that use the edge uv: u and v both free below, one more edge
        let mut through = vec![BigUint::zero()];
        through.extend(poly_mul(&free[u], &free[v]).into_iter().map(|c| c * &w2));

        let new_covered = poly_add(&poly_mul(&covered[u], &all_v), &through);
        free[u] = poly_mul(&free[u], &all_v);
        covered[u] = new_covered;

        alive[v] = false;
        deg[u] -= 1;
        deg[v] = 0;
    }

    let mut total: Poly = vec![BigUint::one()];
    for x in 0..n {
        if alive[x] {
            total = poly_mul(&total, &poly_add(&free[x], &covered[x]));
        }
    }
    CoeffVector::new(n, total).expect("matching counts fit floor(n/2)")
}

/// Coefficients by explicit enumeration of all matchings.
pub fn coeffs_oracle(forest: &WeightedForest) -> Result<CoeffVector> {
    coeffs_oracle_bounded(forest, ORACLE_BOUND)
}

pub fn coeffs_oracle_bounded(forest: &WeightedForest, bound: usize) -> Result<CoeffVector> {
    let n = forest.order();
    if n > bound {
        return Err(Error::SizeBound { size: n, bound });
    }
    let mut b = vec![BigUint::zero(); n / 2 + 1];
    let mut used = vec![false; n];
    let mut weights: Vec<u64> = Vec::new();
    enumerate_matchings(forest.edges(), 0, &mut used, &mut weights, &mut b);
    CoeffVector::new(n, b)
}

fn enumerate_matchings(
    edges: &[crate::graph::Edge],
    from: usize,
    used: &mut [bool],
    chosen: &mut Vec<u64>,
    b: &mut [BigUint],
) {
    let mut prod = BigUint::one();
    for &w in chosen.iter() {
        prod *= w;
        prod *= w;
    }
    b[chosen.len()] += prod;
    for i in from..edges.len() {
        let e = edges[i];
        if used[e.u] || used[e.v] {
            continue;
        }
        used[e.u] = true;
        used[e.v] = true;
        chosen.push(e.w);
        enumerate_matchings(edges, i + 1, used, chosen, b);
        chosen.pop();
        used[e.u] = false;
        used[e.v] = false;
    }
}

/// `b_1 = sum of squared edge weights`.
pub fn b1(forest: &WeightedForest) -> BigUint {
    forest
        .edges()
        .iter()
        .map(|e| BigUint::from(e.w) * BigUint::from(e.w))
        .sum()
}
