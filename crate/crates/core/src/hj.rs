//! Hirzebruch-Jung continued fractions `p/q = a₁ - 1/(a₂ - 1/(… - 1/a_m))`
//! and the combinatorics of the minimal resolution of the cyclic quotient
//! singularity of type `(p, q)`.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::foundation::{int, Rational};

/// Expansion of `p/q` with `aᵢ ≥ 2` and denominators `d₀ = p, d₁ = q, …,
/// d_m = 1, d_{m+1} = 0`, linked by `d_{i-1} + d_{i+1} = aᵢdᵢ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HjChain {
    p: i64,
    q: i64,
    a: Vec<i64>,
    d: Vec<i64>,
}

fn check_pair(p: i64, q: i64) -> Result<()> {
    if q <= 0 || q >= p || p.gcd(&q) != 1 {
        return Err(Error::InvalidPair { p, q });
    }
    Ok(())
}

/// Computes the expansion with the ceiling recurrence
/// `a_k = ⌈d_{k-1}/d_k⌉`, `d_{k+1} = a_k·d_k - d_{k-1}`. (A floor here would
/// produce negative denominators, e.g. `d₂ = -1` for `7/3`.)
pub fn expand(p: i64, q: i64) -> Result<HjChain> {
    check_pair(p, q)?;
    let mut d = vec![p, q];
    let mut a = Vec::new();
    while d[d.len() - 1] != 0 {
        let (prev, cur) = (d[d.len() - 2], d[d.len() - 1]);
        let ak = Integer::div_ceil(&prev, &cur);
        a.push(ak);
        d.push(ak * cur - prev);
    }
    Ok(HjChain { p, q, a, d })
}

impl HjChain {
    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    /// Length `m` of the chain.
    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    /// `a₁, …, a_m`; the self-intersections of the exceptional curves are
    /// their negatives.
    pub fn coefficients(&self) -> &[i64] {
        &self.a
    }

    /// `d₀, …, d_{m+1}`.
    pub fn denominators(&self) -> &[i64] {
        &self.d
    }

    /// `d₁, …, d_m`, the weights used by [`decompose`].
    pub fn inner_denominators(&self) -> &[i64] {
        &self.d[1..=self.a.len()]
    }

    /// Folds the continued fraction back up from the last coefficient.
    pub fn evaluate(&self) -> Rational {
        let mut iter = self.a.iter().rev();
        let mut value = int(*iter.next().expect("chains are never empty"));
        for &ak in iter {
            value = int(ak) - value.recip();
        }
        value
    }
}

/// Non-negative coefficients `x₁, …, x_m` with `Σ xᵢdᵢ = j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub coefficients: Vec<i64>,
}

impl Decomposition {
    pub fn reconstruct(&self, d: &[i64]) -> i64 {
        self.coefficients.iter().zip(d).map(|(x, d)| x * d).sum()
    }
}

/// Greedy decomposition `x_k = ⌊(j - Σ_{i<k} xᵢdᵢ)/d_k⌋`, which is the
/// lexicographically largest one. `d` must decrease and end in 1.
pub fn decompose(j: i64, d: &[i64]) -> Decomposition {
    debug_assert!(j >= 0 && d.last() == Some(&1));
    let mut rest = j;
    let coefficients = d
        .iter()
        .map(|&dk| {
            let x = rest / dk;
            rest -= x * dk;
            x
        })
        .collect();
    Decomposition { coefficients }
}

/// Boundary of the convex hull of `{(i, j) ≠ 0 : i + qj ≡ 0 (mod p)}` inside
/// `[-p, 0] × [0, p]`, facing the origin, from `(-p, 0)` to `(0, p)`.
/// Collinear boundary points are kept, so the result has one vector per
/// denominator of [`expand`].
pub fn lattice_hull_oracle(p: i64, q: i64) -> Result<Vec<(i64, i64)>> {
    check_pair(p, q)?;
    let mut points = Vec::new();
    for x in -p..=0 {
        for y in 0..=p {
            if (x, y) != (0, 0) && (x + q * y).rem_euclid(p) == 0 {
                points.push((x, y));
            }
        }
    }
    // lower hull by Andrew's monotone chain; points are already sorted
    let mut hull: Vec<(i64, i64)> = Vec::new();
    for pt in points {
        while hull.len() >= 2 {
            let (o, a) = (hull[hull.len() - 2], hull[hull.len() - 1]);
            let cross = (a.0 - o.0) * (pt.1 - o.1) - (a.1 - o.1) * (pt.0 - o.0);
            if cross < 0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(pt);
    }
    Ok(hull)
}

/// Reads `(dᵢ)` and `(aᵢ)` off hull vectors: `dᵢ = -Π₁vᵢ` and
/// `v_{i-1} + v_{i+1} = aᵢvᵢ`. Returns `None` if some relation fails.
pub fn chain_from_hull(hull: &[(i64, i64)]) -> Option<(Vec<i64>, Vec<i64>)> {
    let d: Vec<i64> = hull.iter().map(|v| -v.0).collect();
    let mut a = Vec::with_capacity(hull.len().saturating_sub(2));
    for w in hull.windows(3) {
        let (sx, sy) = (w[0].0 + w[2].0, w[0].1 + w[2].1);
        let (vx, vy) = w[1];
        let k = if vx != 0 { sx / vx } else { sy / vy };
        if (k * vx, k * vy) != (sx, sy) {
            return None;
        }
        a.push(k);
    }
    Some((d, a))
}

/// Degrees `⟨c₁(r*𝒪_j), [Sᵢ]⟩` of the pulled-back sheaf on the exceptional
/// curves of the resolution.
pub fn resolve_sheaf_chern(p: i64, q: i64, j: i64) -> Result<Vec<i64>> {
    let chain = expand(p, q)?;
    if !(0..p).contains(&j) {
        return Err(Error::JOutOfRange { j, p });
    }
    Ok(decompose(j, chain.inner_denominators()).coefficients)
}
