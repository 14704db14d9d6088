//! Seifert data of orbifold line bundles over a closed 2-orbifold, and the
//! Seifert fibered spaces they define.
//!
//! A bundle is stored in normal form `(b; β₁, …, βₙ)` with `0 ≤ βᵢ < αᵢ`.
//! Group operations carry overflow of the local invariants into the
//! background degree `b`, so equal bundles always have equal data.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::foundation::{crt_solve, int, is_zero, mod_inverse, rat, smith_normal_form, IntMatrix, Rational};

/// Bound on the number of local-invariant combinations `orbi_spin_status`
/// is willing to scan for bases with non-cyclic Picard group.
pub const ORBI_SPIN_SEARCH_LIMIT: u64 = 1_000_000;

/// Closed 2-orbifold: genus of the underlying curve plus the multiplicities
/// of the marked points.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrbifoldBase {
    genus: u32,
    multiplicities: Vec<i64>,
}

impl OrbifoldBase {
    pub fn new(genus: u32, multiplicities: Vec<i64>) -> Result<Self> {
        if let Some(a) = multiplicities.iter().find(|&&a| a < 2) {
            return Err(Error::InvalidBase(format!("multiplicity {a} is below 2")));
        }
        Ok(OrbifoldBase { genus, multiplicities })
    }

    pub fn smooth(genus: u32) -> Self {
        OrbifoldBase { genus, multiplicities: Vec::new() }
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn multiplicities(&self) -> &[i64] {
        &self.multiplicities
    }

    pub fn marked_points(&self) -> usize {
        self.multiplicities.len()
    }

    /// `2 - 2g + Σ(1/αᵢ - 1)`.
    pub fn euler_characteristic(&self) -> Rational {
        let mut chi = int(2 - 2 * i64::from(self.genus));
        for &a in &self.multiplicities {
            chi += rat(1, a) - int(1);
        }
        chi
    }

    /// `K = (2g - 2; α₁ - 1, …, αₙ - 1)`.
    pub fn canonical_bundle(&self) -> BundleData {
        BundleData {
            base: self.clone(),
            background: 2 * i64::from(self.genus) - 2,
            locals: self.multiplicities.iter().map(|a| a - 1).collect(),
        }
    }

    pub fn trivial_bundle(&self) -> BundleData {
        BundleData { base: self.clone(), background: 0, locals: vec![0; self.marked_points()] }
    }

    /// Pairwise coprime multiplicities; the topological Picard group is then ℤ.
    pub fn has_cyclic_picard(&self) -> bool {
        self.first_shared_factor().is_none()
    }

    /// Genus zero with pairwise coprime multiplicities.
    pub fn is_simply_connected(&self) -> bool {
        self.genus == 0 && self.has_cyclic_picard()
    }

    fn first_shared_factor(&self) -> Option<(i64, i64)> {
        let m = &self.multiplicities;
        for i in 0..m.len() {
            for j in i + 1..m.len() {
                if m[i].gcd(&m[j]) != 1 {
                    return Some((m[i], m[j]));
                }
            }
        }
        None
    }

    /// The unique bundle of the given degree over a base with cyclic Picard
    /// group. Requires `degree · α₁⋯αₙ` to be an integer.
    pub fn bundle_with_degree(&self, degree: &Rational) -> Result<BundleData> {
        if let Some((a, b)) = self.first_shared_factor() {
            return Err(Error::NonCoprime(a, b));
        }
        let product: i64 = self.multiplicities.iter().product();
        let scaled = degree * int(product);
        if !scaled.is_integer() {
            return Err(Error::InvalidData(format!("degree {degree} is not a multiple of 1/{product}")));
        }
        let m = scaled.to_integer();
        // Σβᵢ·(P/αᵢ) ≡ m (mod P) splits into βᵢ·(P/αᵢ) ≡ m (mod αᵢ)
        let mut locals = Vec::with_capacity(self.marked_points());
        let mut residues = Vec::with_capacity(self.marked_points());
        for &a in &self.multiplicities {
            let cofactor = product / a;
            let inv = mod_inverse(cofactor, a).expect("coprime multiplicities");
            let m_mod = m.mod_floor(&BigInt::from(a)).to_i64().expect("residue fits");
            let beta = (m_mod * inv).rem_euclid(a);
            locals.push(beta);
            residues.push(((beta * cofactor).rem_euclid(a), a));
        }
        debug_assert_eq!(crt_solve(&residues).ok(), Some(m.mod_floor(&BigInt::from(product.max(1)))));
        let fractional: Rational = locals.iter().zip(&self.multiplicities).map(|(&b, &a)| rat(b, a)).sum();
        let background = (degree - fractional)
            .to_integer()
            .to_i64()
            .ok_or_else(|| Error::InvalidData("background degree does not fit in 64 bits".into()))?;
        BundleData::new(self, background, locals)
    }

    /// Whether some bundle `E` has `2 deg E = deg K`.
    pub fn orbi_spin_status(&self) -> OrbiSpin {
        if self.has_cyclic_picard() {
            if self.multiplicities.iter().all(|a| a % 2 == 1) {
                let locals = self.multiplicities.iter().map(|a| (a - 1) / 2).collect();
                return OrbiSpin::Exists(BundleData {
                    base: self.clone(),
                    background: i64::from(self.genus) - 1,
                    locals,
                });
            }
            return OrbiSpin::None;
        }
        let combos = self
            .multiplicities
            .iter()
            .try_fold(1u64, |acc, &a| acc.checked_mul(a as u64))
            .unwrap_or(u64::MAX);
        if combos > ORBI_SPIN_SEARCH_LIMIT {
            return OrbiSpin::NonCyclicIndeterminate;
        }
        let half_k = self.canonical_bundle().degree() / int(2);
        let found = LocalInvariants::new(&self.multiplicities).find_map(|locals| {
            let fractional: Rational =
                locals.iter().zip(&self.multiplicities).map(|(&b, &a)| rat(b, a)).sum();
            let background = &half_k - fractional;
            background.is_integer().then(|| BundleData {
                base: self.clone(),
                background: background.to_integer().to_i64().expect("small background"),
                locals,
            })
        });
        match found {
            Some(e) => OrbiSpin::Exists(e),
            None => OrbiSpin::None,
        }
    }
}

/// Outcome of the orbi-spin search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrbiSpin {
    Exists(BundleData),
    None,
    /// Picard group not cyclic and the search space exceeds
    /// [`ORBI_SPIN_SEARCH_LIMIT`].
    NonCyclicIndeterminate,
}

/// Odometer over `∏ [0, αᵢ)` in lexicographic order.
pub(crate) struct LocalInvariants<'a> {
    bounds: &'a [i64],
    next: Option<Vec<i64>>,
}

impl<'a> LocalInvariants<'a> {
    pub(crate) fn new(bounds: &'a [i64]) -> Self {
        LocalInvariants { bounds, next: Some(vec![0; bounds.len()]) }
    }
}

impl Iterator for LocalInvariants<'_> {
    type Item = Vec<i64>;

    fn next(&mut self) -> Option<Vec<i64>> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        for i in (0..succ.len()).rev() {
            succ[i] += 1;
            if succ[i] < self.bounds[i] {
                self.next = Some(succ);
                return Some(current);
            }
            succ[i] = 0;
        }
        Some(current)
    }
}

/// Seifert invariant `(b; β₁, …, βₙ)` of an orbifold line bundle.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BundleData {
    base: OrbifoldBase,
    background: i64,
    locals: Vec<i64>,
}

impl BundleData {
    /// Data already in normal form.
    pub fn new(base: &OrbifoldBase, background: i64, locals: Vec<i64>) -> Result<Self> {
        if locals.len() != base.marked_points() {
            return Err(Error::InvalidData(format!(
                "{} local invariants given for {} marked points",
                locals.len(),
                base.marked_points()
            )));
        }
        for (&b, &a) in locals.iter().zip(base.multiplicities()) {
            if !(0..a).contains(&b) {
                return Err(Error::InvalidData(format!("local invariant {b} outside 0..{a}")));
            }
        }
        Ok(BundleData { base: base.clone(), background, locals })
    }

    /// Reduces arbitrary integer local invariants into `[0, αᵢ)`, carrying
    /// the quotients into the background degree.
    pub fn normalized(base: &OrbifoldBase, background: i64, raw: &[i64]) -> Result<Self> {
        if raw.len() != base.marked_points() {
            return Err(Error::InvalidData(format!(
                "{} local invariants given for {} marked points",
                raw.len(),
                base.marked_points()
            )));
        }
        let mut b = background;
        let locals = raw
            .iter()
            .zip(base.multiplicities())
            .map(|(&beta, &a)| {
                b += beta.div_euclid(a);
                beta.rem_euclid(a)
            })
            .collect();
        Ok(BundleData { base: base.clone(), background: b, locals })
    }

    pub fn base(&self) -> &OrbifoldBase {
        &self.base
    }

    /// Chern number of the de-singularization `|E|`.
    pub fn background(&self) -> i64 {
        self.background
    }

    pub fn locals(&self) -> &[i64] {
        &self.locals
    }

    pub fn is_trivial(&self) -> bool {
        self.background == 0 && self.locals.iter().all(|&b| b == 0)
    }

    /// `b + Σ βᵢ/αᵢ`.
    pub fn degree(&self) -> Rational {
        let mut d = int(self.background);
        for (&b, &a) in self.locals.iter().zip(self.base.multiplicities()) {
            if b != 0 {
                d += rat(b, a);
            }
        }
        d
    }

    pub fn tensor(&self, other: &BundleData) -> Result<BundleData> {
        if self.base != other.base {
            return Err(Error::BaseMismatch);
        }
        let raw: Vec<i64> = self.locals.iter().zip(&other.locals).map(|(a, b)| a + b).collect();
        BundleData::normalized(&self.base, self.background + other.background, &raw)
    }

    pub fn inverse(&self) -> BundleData {
        let raw: Vec<i64> = self.locals.iter().map(|b| -b).collect();
        BundleData::normalized(&self.base, -self.background, &raw).expect("same base")
    }

    pub fn power(&self, k: i64) -> BundleData {
        let raw: Vec<i64> = self.locals.iter().map(|b| b * k).collect();
        BundleData::normalized(&self.base, self.background * k, &raw).expect("same base")
    }

    /// Holomorphic Euler characteristic `1 - g + b` of the sheaf of sections.
    pub fn riemann_roch_count(&self) -> i64 {
        1 - i64::from(self.base.genus) + self.background
    }
}

impl fmt::Display for BundleData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({};", self.background)?;
        for (i, b) in self.locals.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{b}")?;
        }
        f.write_str(")")
    }
}

/// The image condition for `Pic^t(Σ) → ℚ ⊕ ⊕ ℤ/αᵢ`: a degree and local
/// invariants come from a bundle iff `deg - Σβᵢ/αᵢ ∈ ℤ`.
pub fn validate_picard(base: &OrbifoldBase, degree: &Rational, locals: &[i64]) -> bool {
    if locals.len() != base.marked_points() {
        return false;
    }
    let fractional: Rational = locals.iter().zip(base.multiplicities()).map(|(&b, &a)| rat(b, a)).sum();
    (degree - fractional).is_integer()
}

/// The circle bundle `Y = S(N)` of an orbifold line bundle `N` whose local
/// invariants are coprime to the multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SeifertFibration {
    bundle: BundleData,
}

impl SeifertFibration {
    pub fn new(bundle: BundleData) -> Result<Self> {
        for (&b, &a) in bundle.locals.iter().zip(bundle.base.multiplicities()) {
            if b.gcd(&a) != 1 {
                return Err(Error::InvalidData(format!(
                    "pair ({a},{b}) is not coprime; the total space would be singular"
                )));
            }
        }
        Ok(SeifertFibration { bundle })
    }

    /// `M(g; b; (α₁,β₁), …)`.
    pub fn from_pairs(genus: u32, background: i64, pairs: &[(i64, i64)]) -> Result<Self> {
        let base = OrbifoldBase::new(genus, pairs.iter().map(|p| p.0).collect())?;
        let bundle = BundleData::new(&base, background, pairs.iter().map(|p| p.1).collect())?;
        Self::new(bundle)
    }

    /// Circle bundle of Chern number `n` over a smooth genus `g` curve.
    pub fn smooth(genus: u32, chern: i64) -> Self {
        let base = OrbifoldBase::smooth(genus);
        SeifertFibration { bundle: BundleData { base, background: chern, locals: Vec::new() } }
    }

    /// `Σ(α₁, …, αₙ)`: genus zero, pairwise coprime multiplicities, and the
    /// negative generator of the Picard group, of degree `-1/(α₁⋯αₙ)`.
    pub fn brieskorn(alphas: &[i64]) -> Result<Self> {
        if alphas.is_empty() {
            return Err(Error::InvalidBase("at least one multiplicity is required".into()));
        }
        let base = OrbifoldBase::new(0, alphas.to_vec())?;
        let product: i64 = alphas
            .iter()
            .try_fold(1i64, |acc, &a| acc.checked_mul(a))
            .ok_or_else(|| Error::InvalidBase("multiplicity product overflows".into()))?;
        let bundle = base.bundle_with_degree(&rat(-1, product))?;
        Self::new(bundle)
    }

    pub fn bundle(&self) -> &BundleData {
        &self.bundle
    }

    pub fn base(&self) -> &OrbifoldBase {
        &self.bundle.base
    }

    pub fn genus(&self) -> u32 {
        self.bundle.base.genus
    }

    pub fn background(&self) -> i64 {
        self.bundle.background
    }

    pub fn pairs(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.bundle.base.multiplicities.iter().copied().zip(self.bundle.locals.iter().copied())
    }

    pub fn degree(&self) -> Rational {
        self.bundle.degree()
    }

    pub(crate) fn require_nonzero_degree(&self) -> Result<Rational> {
        let d = self.degree();
        if is_zero(&d) {
            Err(Error::ZeroDegree)
        } else {
            Ok(d)
        }
    }

    /// `S(N⁻¹)`, the same manifold with the opposite fiber orientation.
    pub fn inverse(&self) -> SeifertFibration {
        SeifertFibration { bundle: self.bundle.inverse() }
    }

    /// Presents `Pic^t(Σ)/ℤ[N]` with generators `c, h₁, …, hₙ` and relations
    /// `αᵢhᵢ = c` and `b·c + Σβᵢhᵢ = 0`.
    pub fn picard_quotient(&self) -> Result<PicardQuotient> {
        let degree = self.require_nonzero_degree()?;
        let n = self.base().marked_points();
        let mut m = IntMatrix::zeros(n + 1, n + 1);
        for (i, (a, _)) in self.pairs().enumerate() {
            m[(i, 0)] = BigInt::from(-1);
            m[(i, i + 1)] = BigInt::from(a);
        }
        m[(n, 0)] = BigInt::from(self.background());
        for (i, (_, b)) in self.pairs().enumerate() {
            m[(n, i + 1)] = BigInt::from(b);
        }
        let snf = smith_normal_form(&m);
        let order = snf.diagonal.iter().fold(BigInt::one(), |acc, d| acc * d);
        let product: i64 = self.base().multiplicities().iter().product();
        debug_assert_eq!(Rational::from_integer(order.clone()), degree.abs() * int(product));
        Ok(PicardQuotient { invariant_factors: snf.nontrivial_factors(), order })
    }

    /// Whether `e1 ⊗ e2⁻¹` is a power of `N`.
    pub fn same_spinc_class(&self, e1: &BundleData, e2: &BundleData) -> Result<bool> {
        let degree = self.require_nonzero_degree()?;
        if e1.base != *self.base() || e2.base != *self.base() {
            return Err(Error::BaseMismatch);
        }
        let diff = e1.tensor(&e2.inverse())?;
        // degree is additive, so only k = deg(diff)/deg(N) can work
        let k = diff.degree() / degree;
        if !k.is_integer() {
            return Ok(false);
        }
        let k = match k.to_integer().to_i64() {
            Some(k) => k,
            None => return Ok(false),
        };
        let congruences_hold = self
            .pairs()
            .zip(diff.locals())
            .all(|((a, b), &delta)| (k.rem_euclid(a) * b - delta).rem_euclid(a) == 0);
        Ok(congruences_hold)
    }

    /// One bundle per Spin^c class that carries reducibles: the elements of
    /// `Pic^t(Σ)/ℤ[N]`, each represented by its unique member with degree in
    /// `[0, |deg N|)`.
    pub fn spinc_representatives(&self) -> Result<Vec<BundleData>> {
        let degree = self.require_nonzero_degree()?;
        let base = self.base();
        let overflow = || Error::InvalidBase("multiplicity product exceeds 128 bits".into());
        // scaled by P = ∏αᵢ: degree (b; β) becomes b·P + Σβᵢ·P/αᵢ
        let product = base
            .multiplicities()
            .iter()
            .try_fold(1i128, |acc, &a| acc.checked_mul(i128::from(a)))
            .ok_or_else(overflow)?;
        let width = (degree.abs() * Rational::from_integer(BigInt::from(product)))
            .to_integer()
            .to_i128()
            .ok_or_else(overflow)?;
        let cofactors: Vec<i128> = base.multiplicities().iter().map(|&a| product / i128::from(a)).collect();
        let mut reps = Vec::new();
        for locals in LocalInvariants::new(base.multiplicities()) {
            let fractional: i128 = locals.iter().zip(&cofactors).map(|(&b, c)| i128::from(b) * c).sum();
            let mut b = -fractional.div_euclid(product);
            while b * product + fractional < width {
                reps.push(BundleData { base: base.clone(), background: b as i64, locals: locals.clone() });
                b += 1;
            }
        }
        reps.sort_by(|x, y| x.degree().cmp(&y.degree()).then_with(|| x.cmp(y)));
        Ok(reps)
    }

    /// Non-degeneracy of the reducible locus in the Spin^c structure of
    /// `π*(K^{1/2})`.
    pub fn reducible_nondegenerate(&self) -> Result<ReducibleStatus> {
        self.require_nonzero_degree()?;
        let base = self.base();
        if !base.has_cyclic_picard() {
            return Ok(ReducibleStatus::Indeterminate);
        }
        let orbi_spin = matches!(base.orbi_spin_status(), OrbiSpin::Exists(_));
        if orbi_spin && base.genus() > 0 {
            Ok(ReducibleStatus::Degenerate)
        } else {
            Ok(ReducibleStatus::Nondegenerate)
        }
    }
}

impl fmt::Display for SeifertFibration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M({};{};", self.genus(), self.background())?;
        for (i, (a, b)) in self.pairs().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "({a},{b})")?;
        }
        f.write_str(")")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PicardQuotient {
    /// Invariant factors other than one, in divisibility order.
    pub invariant_factors: Vec<BigInt>,
    pub order: BigInt,
}

impl PicardQuotient {
    pub fn is_trivial(&self) -> bool {
        self.order.is_one()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReducibleStatus {
    Nondegenerate,
    Degenerate,
    /// Non-cyclic Picard group, where no complete criterion is available.
    Indeterminate,
}

impl ReducibleStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            ReducibleStatus::Nondegenerate => "nondegenerate",
            ReducibleStatus::Degenerate => "degenerate",
            ReducibleStatus::Indeterminate => "indeterminate",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn base(g: u32, alphas: &[i64]) -> OrbifoldBase {
        OrbifoldBase::new(g, alphas.to_vec()).unwrap()
    }

    fn data(b: &OrbifoldBase, e: i64, locals: &[i64]) -> BundleData {
        BundleData::new(b, e, locals.to_vec()).unwrap()
    }

    #[test]
    fn euler_characteristics() {
        assert_eq!(OrbifoldBase::smooth(3).euler_characteristic(), int(-4));
        assert_eq!(base(0, &[3, 3, 3]).euler_characteristic(), int(0));
        assert_eq!(base(0, &[2, 3, 5]).euler_characteristic(), rat(1, 30));
    }

    #[test]
    fn rejects_small_multiplicity() {
        assert!(OrbifoldBase::new(0, vec![2, 1]).is_err());
        let b = base(0, &[2, 3]);
        assert!(BundleData::new(&b, 0, vec![2, 0]).is_err());
        assert!(BundleData::new(&b, 0, vec![1]).is_err());
    }

    #[test]
    fn degrees() {
        let b = base(0, &[2, 3, 7]);
        assert_eq!(b.trivial_bundle().degree(), int(0));
        let k = b.canonical_bundle();
        assert_eq!((k.background(), k.locals()), (-2, &[1, 2, 6][..]));
        assert_eq!(k.degree(), rat(1, 42));
        assert_eq!(k.degree(), -b.euler_characteristic());
        let gen = b.bundle_with_degree(&rat(1, 42)).unwrap();
        assert_eq!(gen.degree(), rat(1, 42));
    }

    #[test]
    fn canonical_bundles() {
        let k = OrbifoldBase::smooth(4).canonical_bundle();
        assert_eq!((k.background(), k.locals().len()), (6, 0));
        let k = base(0, &[3, 3, 3]).canonical_bundle();
        assert_eq!((k.background(), k.locals()), (-2, &[2, 2, 2][..]));
        assert_eq!(k.degree(), int(0));
    }

    #[test]
    fn group_law_with_carry() {
        let b = base(0, &[2]);
        let h = data(&b, 0, &[1]);
        let sq = h.tensor(&h).unwrap();
        assert_eq!((sq.background(), sq.locals()), (1, &[0][..]));
        assert!(h.tensor(&h.inverse()).unwrap().is_trivial());

        let y = SeifertFibration::from_pairs(0, -1, &[(2, 1), (5, 2), (11, 1)]).unwrap();
        let inv = y.bundle().inverse();
        assert_eq!((inv.background(), inv.locals()), (-2, &[1, 3, 10][..]));
        assert_eq!(inv.degree(), rat(1, 110));
    }

    #[test]
    fn tensor_needs_common_base() {
        let a = base(0, &[2, 3]).trivial_bundle();
        let b = base(1, &[2, 3]).trivial_bundle();
        assert_eq!(a.tensor(&b), Err(Error::BaseMismatch));
    }

    #[test]
    fn power_of_product_of_multiplicities_is_smooth() {
        let b = base(0, &[2, 3, 7]);
        let e = data(&b, -1, &[1, 1, 1]);
        assert!(e.power(42).locals().iter().all(Zero::is_zero));
        assert!(e.power(-84).locals().iter().all(Zero::is_zero));
        assert_eq!(e.power(0), b.trivial_bundle());
    }

    #[test]
    fn picard_image_condition() {
        let b = base(0, &[2, 3, 7]);
        assert!(validate_picard(&b, &int(0), &[0, 0, 0]));
        assert!(validate_picard(&b, &rat(1, 42), &[1, 2, 6]));
        assert!(!validate_picard(&b, &rat(1, 42), &[0, 0, 0]));
        assert!(!validate_picard(&base(0, &[3, 5]), &rat(1, 2), &[0, 0]));
    }

    #[test]
    fn brieskorn_data() {
        for (alphas, b, locals, d) in [
            (vec![2, 3, 7], -1, vec![1, 1, 1], 42),
            (vec![2, 5, 11], -1, vec![1, 2, 1], 110),
            (vec![2, 3, 5], -2, vec![1, 2, 4], 30),
        ] {
            let y = SeifertFibration::brieskorn(&alphas).unwrap();
            assert_eq!(y.background(), b);
            assert_eq!(y.bundle().locals(), &locals[..]);
            assert_eq!(y.degree(), rat(-1, d));
        }
        assert_eq!(SeifertFibration::brieskorn(&[2, 4, 5]), Err(Error::NonCoprime(2, 4)));
    }

    #[test]
    fn picard_quotient_orders() {
        let q = SeifertFibration::smooth(2, -5).picard_quotient().unwrap();
        assert_eq!(q.order, BigInt::from(5));
        assert_eq!(q.invariant_factors, vec![BigInt::from(5)]);
        assert!(SeifertFibration::brieskorn(&[2, 3, 7]).unwrap().picard_quotient().unwrap().is_trivial());
        let y = SeifertFibration::from_pairs(0, -1, &[(2, 1), (3, 1)]).unwrap();
        assert_eq!(y.degree(), rat(-1, 6));
        assert!(y.picard_quotient().unwrap().is_trivial());
        assert_eq!(SeifertFibration::smooth(1, 0).picard_quotient(), Err(Error::ZeroDegree));
        // lens-space-like example with torsion ℤ/2 ⊕ ℤ/2 would need shared factors
        let y = SeifertFibration::from_pairs(0, -2, &[(2, 1), (2, 1), (2, 1)]).unwrap();
        let q = y.picard_quotient().unwrap();
        assert_eq!(Rational::from_integer(q.order.clone()), y.degree().abs() * int(8));
    }

    #[test]
    fn spinc_classes() {
        let y = SeifertFibration::brieskorn(&[2, 3, 7]).unwrap();
        let b = y.base().clone();
        assert!(y.same_spinc_class(&b.trivial_bundle(), &b.trivial_bundle()).unwrap());
        assert!(y.same_spinc_class(&data(&b, 0, &[1, 2, 3]), &data(&b, 4, &[0, 1, 6])).unwrap());

        let smooth = SeifertFibration::smooth(0, 2);
        let b = smooth.base().clone();
        assert!(!smooth.same_spinc_class(&data(&b, 0, &[]), &data(&b, 1, &[])).unwrap());
        assert!(smooth.same_spinc_class(&data(&b, 3, &[]), &data(&b, -1, &[])).unwrap());
    }

    #[test]
    fn spinc_representatives_count_matches_group_order() {
        let y = SeifertFibration::smooth(1, -3);
        assert_eq!(y.spinc_representatives().unwrap().len(), 3);
        let y = SeifertFibration::from_pairs(0, -2, &[(2, 1), (2, 1), (2, 1)]).unwrap();
        let reps = y.spinc_representatives().unwrap();
        let order = y.picard_quotient().unwrap().order;
        assert_eq!(BigInt::from(reps.len()), order);
        for (i, a) in reps.iter().enumerate() {
            for b in &reps[i + 1..] {
                assert!(!y.same_spinc_class(a, b).unwrap());
            }
        }
    }

    #[test]
    fn orbi_spin() {
        assert_eq!(base(0, &[2, 3, 7]).orbi_spin_status(), OrbiSpin::None);
        match base(0, &[3, 5, 7]).orbi_spin_status() {
            OrbiSpin::Exists(e) => {
                assert_eq!((e.background(), e.locals()), (-1, &[1, 2, 3][..]));
                let k = e.base().canonical_bundle();
                assert_eq!(e.degree() * int(2), k.degree());
            }
            other => panic!("expected orbi-spin bundle, got {other:?}"),
        }
        match OrbifoldBase::smooth(1).orbi_spin_status() {
            OrbiSpin::Exists(e) => assert!(e.is_trivial()),
            other => panic!("{other:?}"),
        }
        match base(0, &[3, 3, 3]).orbi_spin_status() {
            OrbiSpin::Exists(e) => assert!(e.is_trivial()),
            other => panic!("{other:?}"),
        }
        assert_eq!(base(0, &[2, 2, 4]).orbi_spin_status(), OrbiSpin::None);
        let big = base(0, &[1000, 1000, 1000]);
        assert_eq!(big.orbi_spin_status(), OrbiSpin::NonCyclicIndeterminate);
    }

    #[test]
    fn reducible_status() {
        let y = SeifertFibration::brieskorn(&[2, 3, 7]).unwrap();
        assert_eq!(y.reducible_nondegenerate().unwrap(), ReducibleStatus::Nondegenerate);
        let y = SeifertFibration::brieskorn(&[3, 5, 7]).unwrap();
        assert_eq!(y.reducible_nondegenerate().unwrap(), ReducibleStatus::Nondegenerate);
        let y = SeifertFibration::from_pairs(0, -2, &[(3, 1), (3, 1), (3, 1)]).unwrap();
        assert_eq!(y.reducible_nondegenerate().unwrap(), ReducibleStatus::Indeterminate);
        let y = SeifertFibration::from_pairs(1, -1, &[(3, 1), (5, 1)]).unwrap();
        assert_eq!(y.reducible_nondegenerate().unwrap(), ReducibleStatus::Degenerate);
        assert_eq!(SeifertFibration::smooth(2, 0).reducible_nondegenerate(), Err(Error::ZeroDegree));
    }

    #[test]
    fn riemann_roch() {
        assert_eq!(OrbifoldBase::smooth(3).trivial_bundle().riemann_roch_count(), -2);
        assert_eq!(OrbifoldBase::smooth(2).canonical_bundle().riemann_roch_count(), 1);
        assert_eq!(data(&base(0, &[2, 3]), 5, &[1, 2]).riemann_roch_count(), 6);
    }

    #[test]
    fn display() {
        let y = SeifertFibration::brieskorn(&[2, 5, 11]).unwrap();
        assert_eq!(y.to_string(), "M(0;-1;(2,1),(5,2),(11,1))");
        assert_eq!(y.bundle().to_string(), "(-1;1,2,1)");
        assert_eq!(SeifertFibration::smooth(1, 3).to_string(), "M(1;3;)");
    }
}
