//! Critical sets of the Seiberg-Witten functional on a Seifert fibration,
//! their Chern-Simons levels and gradings, and the irreducible Floer groups
//! of Seifert homology spheres.
//!
//! Irreducible critical points come in pairs `C±(E)` labelled by bundles
//! `E = (e; ε₁, …, εₙ)` with `e ≥ 0` and `0 ≤ deg E < deg K / 2`; `C±(E)` is
//! a copy of `Symᵉ` of the base curve. Each Spin^c structure pulled back
//! from the base carries one torus of reducibles.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::foundation::{format_rational, int, Rational};
use crate::orbifold::{BundleData, OrbifoldBase, ReducibleStatus, SeifertFibration};
use crate::resolution::{flow_dimension, DimensionEvaluator};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_str(self) -> &'static str {
        match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ComponentKind {
    Reducible,
    Irreducible,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalComponent {
    pub kind: ComponentKind,
    /// `None` for reducibles.
    pub sign: Option<Sign>,
    /// The divisor bundle `E`, or for a reducible the representative of its
    /// Spin^c class.
    pub data: BundleData,
    /// `e` for `Symᵉ`, `g` for the reducible torus.
    pub complex_dim: i64,
    /// `dim_Y` of the data; irreducibles only.
    pub grading: Option<Rational>,
    /// `r` with `cs = 4π²r`.
    pub cs: Rational,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CriticalSet {
    pub components: Vec<CriticalComponent>,
    /// Bundles with `deg E = deg K / 2` exactly. They are excluded from the
    /// critical set and only reported.
    pub boundary: Vec<BundleData>,
}

impl CriticalSet {
    pub fn irreducibles(&self) -> impl Iterator<Item = &CriticalComponent> {
        self.components.iter().filter(|c| c.kind == ComponentKind::Irreducible)
    }

    pub fn reducibles(&self) -> impl Iterator<Item = &CriticalComponent> {
        self.components.iter().filter(|c| c.kind == ComponentKind::Reducible)
    }
}

/// `(deg E - deg K / 2)² / deg N`.
pub fn cs_coefficient(y: &SeifertFibration, e: &BundleData) -> Result<Rational> {
    let deg_n = y.require_nonzero_degree()?;
    if e.base() != y.base() {
        return Err(Error::BaseMismatch);
    }
    let shift = e.degree() - half_canonical_degree(y.base());
    Ok(&shift * &shift / deg_n)
}

fn half_canonical_degree(base: &OrbifoldBase) -> Rational {
    base.canonical_bundle().degree() / int(2)
}

/// Bundles `(e; ε)` with `e ≥ 0`, `0 ≤ εᵢ < αᵢ` and `deg < deg K / 2`, plus
/// the ones sitting exactly on `deg K / 2`.
pub fn irreducible_labels(base: &OrbifoldBase) -> Result<(Vec<BundleData>, Vec<BundleData>)> {
    let alphas = base.multiplicities();
    let overflow = || Error::InvalidBase("multiplicity product exceeds 128 bits".into());
    let product = alphas.iter().try_fold(1i128, |acc, &a| acc.checked_mul(a as i128)).ok_or_else(overflow)?;
    // everything scaled by 2P: the bound is deg K · P, each εᵢ weighs 2P/αᵢ
    let k = base.canonical_bundle().degree() * Rational::from_integer(BigInt::from(product));
    let bound = k.to_integer().to_i128().ok_or_else(overflow)?;
    debug_assert!(k.is_integer());
    let weights: Vec<i128> = alphas.iter().map(|&a| 2 * (product / a as i128)).collect();

    let mut inside = Vec::new();
    let mut boundary = Vec::new();
    if bound < 0 {
        return Ok((inside, boundary));
    }
    let mut e = 0i64;
    while 2 * product * i128::from(e) <= bound {
        let mut locals = vec![0i64; alphas.len()];
        collect_locals(
            &mut Walk {
                alphas,
                weights: &weights,
                bound,
                base,
                e,
                inside: &mut inside,
                boundary: &mut boundary,
            },
            &mut locals,
            0,
            2 * product * i128::from(e),
        );
        e += 1;
    }
    Ok((inside, boundary))
}

struct Walk<'a> {
    alphas: &'a [i64],
    weights: &'a [i128],
    bound: i128,
    base: &'a OrbifoldBase,
    e: i64,
    inside: &'a mut Vec<BundleData>,
    boundary: &'a mut Vec<BundleData>,
}

fn collect_locals(w: &mut Walk<'_>, locals: &mut Vec<i64>, i: usize, acc: i128) {
    if i == w.alphas.len() {
        let data = BundleData::new(w.base, w.e, locals.clone()).expect("normal form by construction");
        if acc < w.bound {
            w.inside.push(data);
        } else {
            w.boundary.push(data);
        }
        return;
    }
    for eps in 0..w.alphas[i] {
        let next = acc + w.weights[i] * i128::from(eps);
        if next > w.bound {
            break;
        }
        locals[i] = eps;
        collect_locals(w, locals, i + 1, next);
    }
    locals[i] = 0;
}

/// Components of the critical set, optionally restricted to the Spin^c class
/// of `spinc`. Reducibles come first, then irreducibles ordered by grading,
/// data and sign.
pub fn enumerate_components(y: &SeifertFibration, spinc: Option<&BundleData>) -> Result<CriticalSet> {
    y.require_nonzero_degree()?;
    if let Some(s) = spinc {
        if s.base() != y.base() {
            return Err(Error::BaseMismatch);
        }
    }
    let in_class = |e: &BundleData| -> Result<bool> {
        match spinc {
            Some(s) => y.same_spinc_class(e, s),
            None => Ok(true),
        }
    };

    let genus = i64::from(y.genus());
    let mut components = Vec::new();
    for rep in y.spinc_representatives()? {
        if in_class(&rep)? {
            components.push(CriticalComponent {
                kind: ComponentKind::Reducible,
                sign: None,
                data: rep,
                complex_dim: genus,
                grading: None,
                cs: Rational::zero(),
            });
        }
    }

    let (labels, boundary) = irreducible_labels(y.base())?;
    let mut labels_kept = Vec::with_capacity(labels.len());
    for e in labels {
        if in_class(&e)? {
            labels_kept.push(e);
        }
    }
    let mut boundary_kept = Vec::new();
    for e in boundary {
        if in_class(&e)? {
            boundary_kept.push(e);
        }
    }

    let mut max_locals = vec![0i64; y.base().marked_points()];
    for e in &labels_kept {
        for (m, &eps) in max_locals.iter_mut().zip(e.locals()) {
            *m = (*m).max(eps);
        }
    }
    let evaluator = DimensionEvaluator::new(y, &max_locals)?;
    let mut irreducible = Vec::with_capacity(2 * labels_kept.len());
    for e in labels_kept {
        let grading = evaluator.eval(&e)?;
        let cs = cs_coefficient(y, &e)?;
        for sign in [Sign::Plus, Sign::Minus] {
            irreducible.push(CriticalComponent {
                kind: ComponentKind::Irreducible,
                sign: Some(sign),
                data: e.clone(),
                complex_dim: e.background(),
                grading: Some(grading.clone()),
                cs: cs.clone(),
            });
        }
    }
    irreducible.sort_by(|a, b| {
        a.grading.cmp(&b.grading).then_with(|| a.data.cmp(&b.data)).then_with(|| a.sign.cmp(&b.sign))
    });
    components.extend(irreducible);
    Ok(CriticalSet { components, boundary: boundary_kept })
}

/// Unique `e₀ ⊗ Nᵏ` of largest degree strictly below `deg K / 2`.
pub fn floor_half_canonical(y: &SeifertFibration, e0: &BundleData) -> Result<BundleData> {
    let deg_n = y.require_nonzero_degree()?;
    if e0.base() != y.base() {
        return Err(Error::BaseMismatch);
    }
    let half_k = half_canonical_degree(y.base());
    // deg(e₀ ⊗ Nᵏ) = d₀ + t·|deg N| with t = k·sign(deg N); want the largest t < s
    let s = (half_k - e0.degree()) / deg_n.abs();
    let t: BigInt = s.ceil().to_integer() - 1;
    let t = t.to_i64().ok_or_else(|| Error::InvalidData("twist exponent out of range".into()))?;
    let k = if deg_n.is_negative() { -t } else { t };
    e0.tensor(&y.bundle().power(k))
}

/// One end of a flow line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Endpoint {
    Irreducible { sign: Sign, data: BundleData },
    Reducible,
}

/// Expected dimension of the space of flows from `from` to `to`.
pub fn interpolation_dimension(y: &SeifertFibration, from: &Endpoint, to: &Endpoint) -> Result<Rational> {
    let deg_n = y.require_nonzero_degree()?;
    let (sign1, e1) = match from {
        Endpoint::Reducible => return Err(Error::FromReducible),
        Endpoint::Irreducible { sign, data } => (*sign, data),
    };
    match to {
        Endpoint::Irreducible { sign, data } => {
            if *sign != sign1 {
                return Err(Error::OppositeSign);
            }
            flow_dimension(y, e1, data)
        }
        Endpoint::Reducible => {
            if deg_n.is_positive() {
                return Err(Error::WrongOrientation);
            }
            let target = floor_half_canonical(y, e1)?;
            Ok(flow_dimension(y, e1, &target)? + int(1))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub locals: Vec<i64>,
    pub sign: Sign,
    pub grading: BigInt,
}

/// Irreducible Floer homology of a negatively oriented Seifert fibration
/// whose irreducible critical points are all isolated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FloerTable {
    pub manifold: SeifertFibration,
    pub generators: Vec<Generator>,
    /// Grading to rank; each group is free abelian.
    pub ranks: BTreeMap<BigInt, u64>,
}

impl FloerTable {
    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn total_rank(&self) -> u64 {
        self.ranks.values().sum()
    }

    pub fn rank_at(&self, grading: i64) -> u64 {
        self.ranks.get(&BigInt::from(grading)).copied().unwrap_or(0)
    }
}

pub fn floer_table(y: &SeifertFibration) -> Result<FloerTable> {
    let deg_n = y.require_nonzero_degree()?;
    if deg_n.is_positive() {
        return Err(Error::WrongOrientation);
    }
    if y.reducible_nondegenerate()? == ReducibleStatus::Degenerate {
        return Err(Error::DegenerateReducible);
    }
    let set = enumerate_components(y, None)?;
    let positive: Vec<String> = set
        .irreducibles()
        .filter(|c| c.complex_dim > 0)
        .map(|c| format!("C{}{}", c.sign.map_or("", Sign::as_str), c.data))
        .collect();
    if !positive.is_empty() {
        return Err(Error::NonIsolatedCritical(positive.join(", ")));
    }
    let mut generators = Vec::new();
    let mut ranks = BTreeMap::new();
    for c in set.irreducibles() {
        let grading = c.grading.as_ref().expect("irreducibles carry a grading");
        if !grading.is_integer() {
            return Err(Error::NonIntegralGrading(format!("{} at {}", format_rational(grading), c.data)));
        }
        let grading = grading.to_integer();
        *ranks.entry(grading.clone()).or_insert(0) += 1;
        generators.push(Generator {
            locals: c.data.locals().to_vec(),
            sign: c.sign.expect("irreducibles carry a sign"),
            grading,
        });
    }
    Ok(FloerTable { manifold: y.clone(), generators, ranks })
}

/// Whether every grading is an even integer; then the differential vanishes.
pub fn gradings_even(table: &FloerTable) -> bool {
    table.ranks.keys().all(|g| g.is_even())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foundation::rat;

    fn sigma(alphas: &[i64]) -> SeifertFibration {
        SeifertFibration::brieskorn(alphas).unwrap()
    }

    #[test]
    fn poincare_sphere_has_no_irreducibles() {
        let set = enumerate_components(&sigma(&[2, 3, 5]), None).unwrap();
        assert_eq!(set.irreducibles().count(), 0);
        assert_eq!(set.reducibles().count(), 1);
        assert!(floer_table(&sigma(&[2, 3, 5])).unwrap().is_empty());
    }

    #[test]
    fn sigma_2_3_7() {
        let y = sigma(&[2, 3, 7]);
        let set = enumerate_components(&y, None).unwrap();
        let irr: Vec<_> = set.irreducibles().collect();
        assert_eq!(irr.len(), 2);
        assert!(irr.iter().all(|c| c.data.is_trivial() && c.grading == Some(int(0))));
        assert_eq!(irr[0].cs, rat(-1, 168));
        assert_eq!(irr[0].sign, Some(Sign::Plus));
        let t = floer_table(&y).unwrap();
        assert_eq!(t.ranks, BTreeMap::from([(BigInt::from(0), 2)]));
    }

    #[test]
    fn sigma_2_5_11() {
        let y = sigma(&[2, 5, 11]);
        let t = floer_table(&y).unwrap();
        assert_eq!(t.rank_at(0), 2);
        assert_eq!(t.rank_at(2), 2);
        assert_eq!(t.total_rank(), 4);
        assert!(gradings_even(&t));
        assert_eq!(t.generators[2].locals, vec![0, 0, 1]);
    }

    #[test]
    fn floer_table_preconditions() {
        assert_eq!(floer_table(&sigma(&[2, 3, 7]).inverse()), Err(Error::WrongOrientation));
        assert_eq!(floer_table(&SeifertFibration::smooth(0, 0)), Err(Error::ZeroDegree));
        let y = SeifertFibration::smooth(3, -1);
        match floer_table(&y) {
            Err(Error::DegenerateReducible) => {}
            other => panic!("{other:?}"),
        }
        let y = SeifertFibration::from_pairs(0, -1, &[(3, 1), (5, 1), (7, 1), (11, 1), (13, 1)]).unwrap();
        assert!(matches!(floer_table(&y), Err(Error::NonIsolatedCritical(_))));
    }

    #[test]
    fn cs_levels() {
        let y = sigma(&[2, 3, 7]);
        let zero = y.base().trivial_bundle();
        assert_eq!(cs_coefficient(&y, &zero).unwrap(), rat(-1, 168));
        let y = SeifertFibration::smooth(3, -2);
        let half = BundleData::new(y.base(), 2, vec![]).unwrap();
        assert_eq!(cs_coefficient(&y, &half).unwrap(), int(0));
        let set = enumerate_components(&sigma(&[2, 5, 11]), None).unwrap();
        assert!(set.irreducibles().all(|c| c.cs.is_negative()));
        assert!(set.reducibles().all(|c| c.cs.is_zero()));
    }

    #[test]
    fn smooth_components_by_spinc() {
        let y = SeifertFibration::smooth(3, -2);
        let all = enumerate_components(&y, None).unwrap();
        assert_eq!(all.reducibles().count(), 2);
        // e ∈ {0, 1}; e = 2 = deg K / 2 is on the boundary
        assert_eq!(all.irreducibles().count(), 4);
        assert_eq!(all.boundary.len(), 1);
        let odd = BundleData::new(y.base(), 1, vec![]).unwrap();
        let set = enumerate_components(&y, Some(&odd)).unwrap();
        assert_eq!(set.reducibles().count(), 1);
        assert!(set.irreducibles().all(|c| c.data.background() == 1));
        assert!(set.boundary.is_empty());
    }

    #[test]
    fn half_canonical_floor() {
        let y = sigma(&[2, 3, 7]);
        let zero = y.base().trivial_bundle();
        assert_eq!(floor_half_canonical(&y, &zero).unwrap(), zero);
        let y = SeifertFibration::smooth(3, -1);
        let r = floor_half_canonical(&y, &y.base().trivial_bundle()).unwrap();
        assert_eq!(r.degree(), int(1));
        assert_eq!(floor_half_canonical(&y, &r).unwrap(), r);
    }

    #[test]
    fn interpolation() {
        let y = sigma(&[2, 5, 11]);
        let e1 = BundleData::new(y.base(), 0, vec![0, 0, 1]).unwrap();
        let e0 = y.base().trivial_bundle();
        let from = Endpoint::Irreducible { sign: Sign::Plus, data: e1.clone() };
        let to = Endpoint::Irreducible { sign: Sign::Plus, data: e0.clone() };
        assert_eq!(interpolation_dimension(&y, &from, &to).unwrap(), int(2));
        let self_flow = Endpoint::Irreducible { sign: Sign::Plus, data: e1.clone() };
        assert_eq!(interpolation_dimension(&y, &from, &self_flow).unwrap(), int(0));
        let minus = Endpoint::Irreducible { sign: Sign::Minus, data: e0 };
        assert_eq!(interpolation_dimension(&y, &from, &minus), Err(Error::OppositeSign));
        assert_eq!(interpolation_dimension(&y, &Endpoint::Reducible, &to), Err(Error::FromReducible));

        let y = sigma(&[2, 3, 7]);
        let from = Endpoint::Irreducible { sign: Sign::Minus, data: y.base().trivial_bundle() };
        assert_eq!(interpolation_dimension(&y, &from, &Endpoint::Reducible).unwrap(), int(1));
    }
}
