//! The star-shaped plumbing lattice of the resolved ruled surface over a
//! Seifert fibration, and Riemann-Roch dimensions computed on it.
//!
//! Vertex 0 is the central curve (self-intersection `b`); the chain of the
//! `j`-th marked point follows, one vertex per coefficient of the expansion
//! of `αⱼ/βⱼ` (self-intersection `-aℓ`). Adjacent vertices meet once.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::foundation::{int, rat, solve_exact, RatMatrix, Rational};
use crate::hj::{decompose, expand, HjChain};
use crate::orbifold::{BundleData, OrbifoldBase, SeifertFibration};

#[derive(Clone, Debug)]
pub struct PlumbingLattice {
    fibration: SeifertFibration,
    degree: Rational,
    chains: Vec<HjChain>,
}

pub fn build_lattice(y: &SeifertFibration) -> Result<PlumbingLattice> {
    PlumbingLattice::new(y)
}

impl PlumbingLattice {
    pub fn new(y: &SeifertFibration) -> Result<Self> {
        let degree = y.require_nonzero_degree()?;
        let chains = y.pairs().map(|(a, b)| expand(a, b)).collect::<Result<Vec<_>>>()?;
        Ok(PlumbingLattice { fibration: y.clone(), degree, chains })
    }

    pub fn fibration(&self) -> &SeifertFibration {
        &self.fibration
    }

    pub fn central_weight(&self) -> i64 {
        self.fibration.background()
    }

    pub fn chains(&self) -> &[HjChain] {
        &self.chains
    }

    pub fn size(&self) -> usize {
        1 + self.chains.iter().map(HjChain::len).sum::<usize>()
    }

    /// Intersection matrix.
    pub fn matrix(&self) -> RatMatrix {
        let mut m = RatMatrix::zeros(self.size(), self.size());
        m[(0, 0)] = int(self.central_weight());
        let mut idx = 1;
        for chain in &self.chains {
            for (l, &a) in chain.coefficients().iter().enumerate() {
                let v = idx + l;
                let prev = if l == 0 { 0 } else { v - 1 };
                m[(v, v)] = int(-a);
                m[(v, prev)] = int(1);
                m[(prev, v)] = int(1);
            }
            idx += chain.len();
        }
        m
    }

    pub fn is_negative_definite(&self) -> bool {
        self.matrix().is_negative_definite()
    }

    fn check_base(&self, e: &BundleData) -> Result<()> {
        if e.base() != self.fibration.base() {
            return Err(Error::BaseMismatch);
        }
        Ok(())
    }
}

/// A vector indexed by the lattice vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChernVector {
    pub central: Rational,
    pub chains: Vec<Vec<Rational>>,
}

impl ChernVector {
    pub fn flatten(&self) -> Vec<Rational> {
        let mut out = vec![self.central.clone()];
        for chain in &self.chains {
            out.extend(chain.iter().cloned());
        }
        out
    }

    fn from_flat(lat: &PlumbingLattice, flat: Vec<Rational>) -> Self {
        let mut iter = flat.into_iter();
        let central = iter.next().expect("lattice has a central vertex");
        let chains = lat.chains.iter().map(|c| iter.by_ref().take(c.len()).collect()).collect();
        ChernVector { central, chains }
    }

    pub fn dot(&self, other: &ChernVector) -> Rational {
        self.flatten().iter().zip(other.flatten()).map(|(a, b)| a * b).sum()
    }

    fn sub(&self, other: &ChernVector) -> ChernVector {
        ChernVector {
            central: &self.central - &other.central,
            chains: self
                .chains
                .iter()
                .zip(&other.chains)
                .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x - y).collect())
                .collect(),
        }
    }
}

/// Evaluations of `c₁(Ê)`: `e` on the central curve and the greedy
/// decomposition of `εⱼ` along chain `j`.
pub fn xi_vector(lat: &PlumbingLattice, e: &BundleData) -> Result<ChernVector> {
    lat.check_base(e)?;
    let chains = lat
        .chains
        .iter()
        .zip(e.locals())
        .map(|(chain, &eps)| {
            decompose(eps, chain.inner_denominators()).coefficients.into_iter().map(int).collect()
        })
        .collect();
    Ok(ChernVector { central: int(e.background()), chains })
}

/// Evaluations of the canonical class: `-b + 2g - 2` centrally, `aℓ - 2`
/// along the chains (adjunction on a sphere of square `-aℓ`).
pub fn kappa_vector(lat: &PlumbingLattice) -> ChernVector {
    let g = i64::from(lat.fibration.genus());
    ChernVector {
        central: int(-lat.central_weight() + 2 * g - 2),
        chains: lat.chains.iter().map(|c| c.coefficients().iter().map(|a| int(a - 2)).collect()).collect(),
    }
}

/// Coefficients `x` of `c₁(Ê)` in the basis of curves, i.e. the solution of
/// `M·x = Ξ`, in closed form: `x⁰ = deg E / deg Y` and along chain `j`
/// `x_ℓ = d_ℓ (x⁰/d₀ - Σ_{i≤ℓ} S_i / (d_{i-1} d_i))` with `S_i = Σ_{k≥i} d_k ξ_k`.
pub fn chern_coefficients(lat: &PlumbingLattice, e: &BundleData) -> Result<ChernVector> {
    let xi = xi_vector(lat, e)?;
    let x0 = e.degree() / &lat.degree;
    let chains =
        lat.chains.iter().zip(&xi.chains).map(|(chain, xs)| chain_coefficients(chain, xs, &x0)).collect();
    Ok(ChernVector { central: x0, chains })
}

fn chain_coefficients(chain: &HjChain, xi: &[Rational], x0: &Rational) -> Vec<Rational> {
    let d = chain.denominators();
    let m = chain.len();
    // tails S_i for i = 1..=m, stored at index i - 1
    let mut tails = vec![Rational::zero(); m];
    let mut acc = Rational::zero();
    for i in (1..=m).rev() {
        acc += &xi[i - 1] * int(d[i]);
        tails[i - 1] = acc.clone();
    }
    let base = x0 / int(d[0]);
    let mut running = Rational::zero();
    (1..=m)
        .map(|l| {
            running += &tails[l - 1] / int(d[l - 1] * d[l]);
            (&base - &running) * int(d[l])
        })
        .collect()
}

/// `M⁻¹Ξ` by exact Gaussian elimination; the reference for
/// [`chern_coefficients`].
pub fn solve_coefficients(lat: &PlumbingLattice, e: &BundleData) -> Result<ChernVector> {
    let xi = xi_vector(lat, e)?;
    let x = solve_exact(&lat.matrix(), &xi.flatten())?;
    Ok(ChernVector::from_flat(lat, x))
}

/// `(Ξ - κ)ᵀ M⁻¹ Ξ`.
pub fn dim_y(y: &SeifertFibration, e: &BundleData) -> Result<Rational> {
    let lat = PlumbingLattice::new(y)?;
    dim_on_lattice(&lat, e)
}

pub fn dim_on_lattice(lat: &PlumbingLattice, e: &BundleData) -> Result<Rational> {
    let xi = xi_vector(lat, e)?;
    let x = chern_coefficients(lat, e)?;
    Ok(xi.sub(&kappa_vector(lat)).dot(&x))
}

/// `dim_Y(e₁) + dim_{Y⁻¹}(e₂)`.
pub fn flow_dimension(y: &SeifertFibration, e1: &BundleData, e2: &BundleData) -> Result<Rational> {
    Ok(dim_y(y, e1)? + dim_y(&y.inverse(), e2)?)
}

/// Result of evaluating the closed-form dimension expression in its
/// originally published layout.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrintedForm {
    pub value: Rational,
    pub agrees: bool,
}

/// Evaluates
/// `Σⱼ (Σ_{k,ℓ} d_kξ_k d_ℓξ_ℓ Σ_{i≤min(k,ℓ)} 1/(d_{i-1}d_i) + Σ_ℓ d_ℓξ_ℓ Σ_{i≤ℓ} 1/(d_{i-1}d_i) - Σ_ℓ ξ_ℓ)
///  + e + (deg E / deg Y)(deg E - deg K)`
/// and compares with [`dim_y`]. The two differ whenever a chain carries a
/// nonzero `ξ`, e.g. 4/11 against 2 on `Σ(2,5,11)` with `ε₃ = 1`.
pub fn dim_closed_form_as_printed(y: &SeifertFibration, e: &BundleData) -> Result<PrintedForm> {
    let lat = PlumbingLattice::new(y)?;
    let xi = xi_vector(&lat, e)?;
    let mut value = Rational::zero();
    for (chain, xs) in lat.chains.iter().zip(&xi.chains) {
        let d = chain.denominators();
        let m = chain.len();
        // prefix[l] = Σ_{i≤l} 1/(d_{i-1}d_i)
        let mut prefix = vec![Rational::zero(); m + 1];
        for i in 1..=m {
            prefix[i] = &prefix[i - 1] + rat(1, d[i - 1] * d[i]);
        }
        let w: Vec<Rational> = (1..=m).map(|l| &xs[l - 1] * int(d[l])).collect();
        for k in 1..=m {
            for l in 1..=m {
                value += &w[k - 1] * &w[l - 1] * &prefix[k.min(l)];
            }
        }
        for l in 1..=m {
            value += &w[l - 1] * &prefix[l];
            value -= &xs[l - 1];
        }
    }
    let deg_e = e.degree();
    let deg_k = y.base().canonical_bundle().degree();
    value += int(e.background()) + &deg_e / &lat.degree * (&deg_e - deg_k);
    let agrees = value == dim_on_lattice(&lat, e)?;
    Ok(PrintedForm { value, agrees })
}

/// Fast repeated evaluation of `dim_Y` for many bundles over one fibration.
///
/// Along chain `j` the rows of `M·x = Ξ` read
/// `x_{ℓ-1} - aℓ xℓ + x_{ℓ+1} = ξℓ` with `x₀ = x⁰` and `x_{m+1} = 0`, so
/// `xℓ = x⁰ dℓ/αⱼ - τℓ/αⱼ` where `τ₀ = 0`, `τ₁ = Σ dₖξₖ` and
/// `τ_{ℓ+1} = aℓτℓ - τ_{ℓ-1} - αⱼξℓ` are integers. The chain's share of
/// `(Ξ - κ)·x` is then `x⁰·Aⱼ(εⱼ) - Bⱼ(εⱼ)` with `αⱼAⱼ, αⱼBⱼ` integral;
/// tabulating them makes each evaluation `O(n)`.
#[derive(Clone, Debug)]
pub struct DimensionEvaluator {
    base: OrbifoldBase,
    /// `P = ∏αⱼ`.
    product: i128,
    /// `deg N · P`.
    scaled_degree: i128,
    central_kappa: i128,
    /// `(P·Aⱼ(ε), P·Bⱼ(ε))` for `ε = 0..=max`.
    tables: Vec<Vec<(i128, i128)>>,
}

impl DimensionEvaluator {
    /// Tabulates `εⱼ = 0..=max_locals[j]`.
    pub fn new(y: &SeifertFibration, max_locals: &[i64]) -> Result<Self> {
        let lat = PlumbingLattice::new(y)?;
        if max_locals.len() != lat.chains.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} bounds for {} chains",
                max_locals.len(),
                lat.chains.len()
            )));
        }
        let product = y
            .base()
            .multiplicities()
            .iter()
            .try_fold(1i128, |acc, &a| acc.checked_mul(i128::from(a)))
            .ok_or_else(too_large)?;
        let scaled_degree = (&lat.degree * Rational::from_integer(BigInt::from(product)))
            .to_integer()
            .to_i128()
            .ok_or_else(too_large)?;
        let g = i64::from(y.genus());
        let central_kappa = i128::from(-lat.central_weight() + 2 * g - 2);
        let mut tables = Vec::with_capacity(lat.chains.len());
        for (chain, &top) in lat.chains.iter().zip(max_locals) {
            let cofactor = product / i128::from(chain.p());
            let mut table = Vec::new();
            for eps in 0..=top.min(chain.p() - 1) {
                let (a, b) = chain_terms(chain, eps).ok_or_else(too_large)?;
                let scaled = a.checked_mul(cofactor).zip(b.checked_mul(cofactor)).ok_or_else(too_large)?;
                table.push(scaled);
            }
            tables.push(table);
        }
        Ok(DimensionEvaluator { base: y.base().clone(), product, scaled_degree, central_kappa, tables })
    }

    pub fn eval(&self, e: &BundleData) -> Result<Rational> {
        if *e.base() != self.base {
            return Err(Error::BaseMismatch);
        }
        // x⁰ = D/(deg N·P) with D = deg E·P
        let mut scaled_e = i128::from(e.background()) * self.product;
        let mut slope = (i128::from(e.background()) - self.central_kappa) * self.product;
        let mut offset = 0i128;
        for ((table, &eps), &a) in self.tables.iter().zip(e.locals()).zip(self.base.multiplicities()) {
            let (sa, sb) = table
                .get(eps as usize)
                .ok_or_else(|| Error::InvalidData(format!("local invariant {eps} beyond tabulated range")))?;
            scaled_e += i128::from(eps) * (self.product / i128::from(a));
            slope += sa;
            offset += sb;
        }
        // dim = x⁰·slope/P - offset/P
        let numer = scaled_e
            .checked_mul(slope)
            .and_then(|u| offset.checked_mul(self.scaled_degree).and_then(|v| u.checked_sub(v)))
            .ok_or_else(too_large)?;
        let denom = self.scaled_degree.checked_mul(self.product).ok_or_else(too_large)?;
        Ok(Rational::new(BigInt::from(numer), BigInt::from(denom)))
    }
}

fn too_large() -> Error {
    Error::InvalidData("values exceed 128-bit range".into())
}

/// `(αA, αB)` for one chain and local invariant.
fn chain_terms(chain: &HjChain, eps: i64) -> Option<(i128, i128)> {
    let d = chain.denominators();
    let a = chain.coefficients();
    let alpha = i128::from(chain.p());
    let xi = decompose(eps, chain.inner_denominators()).coefficients;
    let mut prev = 0i128;
    let mut cur: i128 = xi.iter().zip(&d[1..]).map(|(&x, &dk)| i128::from(x) * i128::from(dk)).sum();
    let (mut sa, mut sb) = (0i128, 0i128);
    for l in 0..chain.len() {
        let w = i128::from(xi[l] - (a[l] - 2));
        sa = sa.checked_add(w.checked_mul(i128::from(d[l + 1]))?)?;
        sb = sb.checked_add(w.checked_mul(cur)?)?;
        let next =
            i128::from(a[l]).checked_mul(cur)?.checked_sub(prev)?.checked_sub(alpha * i128::from(xi[l]))?;
        prev = cur;
        cur = next;
    }
    debug_assert_eq!(cur, 0, "x_(m+1) must vanish");
    Some((sa, sb))
}
