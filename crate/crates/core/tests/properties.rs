use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use seifert_core::foundation::{int, rat, smith_normal_form, solve_exact, IntMatrix, RatMatrix, Rational};
use seifert_core::hj::{chain_from_hull, decompose, expand, lattice_hull_oracle};
use seifert_core::moduli::{
    cs_coefficient, enumerate_components, floer_table, floor_half_canonical, irreducible_labels,
    ComponentKind,
};
use seifert_core::notation::{format_bundle, format_manifold, parse_bundle, parse_manifold};
use seifert_core::orbifold::{validate_picard, BundleData, OrbifoldBase, SeifertFibration};
use seifert_core::resolution::{
    build_lattice, chern_coefficients, dim_y, solve_coefficients, xi_vector, DimensionEvaluator,
};

fn coprime_below(a: i64, raw: i64) -> i64 {
    (0..a).map(|k| 1 + (raw + k) % (a - 1)).find(|b| b.gcd(&a) == 1).unwrap()
}

fn pairs_strategy(max_points: usize, max_alpha: i64) -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((2..=max_alpha, 0..max_alpha), 0..=max_points)
        .prop_map(|v| v.into_iter().map(|(a, r)| (a, coprime_below(a, r))).collect())
}

fn fibration_strategy(max_points: usize, max_alpha: i64) -> impl Strategy<Value = SeifertFibration> {
    (0u32..3, -6i64..5, pairs_strategy(max_points, max_alpha))
        .prop_map(|(g, b, pairs)| SeifertFibration::from_pairs(g, b, &pairs).unwrap())
        .prop_filter("nonzero degree", |y| !y.degree().is_zero())
}

fn base_strategy() -> impl Strategy<Value = OrbifoldBase> {
    (0u32..3, prop::collection::vec(2i64..12, 0..4)).prop_map(|(g, a)| OrbifoldBase::new(g, a).unwrap())
}

fn bundle_on(base: OrbifoldBase) -> impl Strategy<Value = BundleData> {
    let locals: Vec<_> = base.multiplicities().iter().map(|&a| 0..a).collect();
    (-5i64..6, locals).prop_map(move |(e, l)| BundleData::new(&base, e, l).unwrap())
}

fn with_bundles(y: SeifertFibration, n: usize) -> impl Strategy<Value = (SeifertFibration, Vec<BundleData>)> {
    prop::collection::vec(bundle_on(y.base().clone()), n).prop_map(move |v| (y.clone(), v))
}

fn small_primes() -> impl Strategy<Value = Vec<i64>> {
    prop::sample::subsequence(vec![2i64, 3, 5, 7, 11, 13, 17, 19, 23], 3)
}

fn matrix_strategy(rows: usize, cols: usize) -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec(-9i64..10, rows * cols)
        .prop_map(move |v| IntMatrix::new(rows, cols, v.into_iter().map(BigInt::from).collect()).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn smith_form_is_a_divisibility_chain(m in (1usize..5, 1usize..5).prop_flat_map(|(r, c)| matrix_strategy(r, c))) {
        let snf = smith_normal_form(&m);
        let product = snf.left.mul(&m).unwrap().mul(&snf.right).unwrap();
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                let want = if i == j { snf.diagonal[i].clone() } else { BigInt::zero() };
                prop_assert_eq!(&product[(i, j)], &want);
            }
        }
        for w in snf.diagonal.windows(2) {
            prop_assert!(!w[0].is_negative());
            let divides = if w[0].is_zero() { w[1].is_zero() } else { w[1].is_multiple_of(&w[0]) };
            prop_assert!(divides);
        }
        prop_assert!(snf.left.determinant().abs().is_one());
        prop_assert!(snf.right.determinant().abs().is_one());
        if m.rows() == m.cols() {
            let d: BigInt = snf.diagonal.iter().product();
            prop_assert_eq!(d, m.determinant().abs());
        }
    }

    #[test]
    fn solve_multiplies_back(m in (1usize..6).prop_flat_map(|n| matrix_strategy(n, n)), rhs in prop::collection::vec(-20i64..20, 6)) {
        let a = m.to_rational();
        let b: Vec<Rational> = rhs[..a.rows()].iter().map(|&x| int(x)).collect();
        match solve_exact(&a, &b) {
            Ok(x) => prop_assert_eq!(a.mul_vec(&x).unwrap(), b),
            Err(_) => prop_assert!(m.determinant().is_zero()),
        }
    }

    #[test]
    fn rationals_form_a_field(a in -50i64..50, b in 1i64..50, c in -50i64..50, d in 1i64..50) {
        let (x, y) = (rat(a, b), rat(c, d));
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x + &y) * &y, &x * &y + &y * &y);
        if !x.is_zero() {
            prop_assert!((&x * x.recip()).is_one());
        }
        prop_assert!(x.denom().is_positive());
    }

    #[test]
    fn degree_is_a_homomorphism(bs in base_strategy().prop_flat_map(|b| prop::collection::vec(bundle_on(b), 3)), k in -4i64..5) {
        let (e1, e2, e3) = (&bs[0], &bs[1], &bs[2]);
        let t = e1.tensor(e2).unwrap();
        prop_assert_eq!(t.degree(), e1.degree() + e2.degree());
        prop_assert_eq!(e1.power(k).degree(), e1.degree() * int(k));
        prop_assert_eq!(e1.inverse().degree(), -e1.degree());
        prop_assert_eq!(t.tensor(e3).unwrap(), e1.tensor(&e2.tensor(e3).unwrap()).unwrap());
        prop_assert_eq!(&t, &e2.tensor(e1).unwrap());
        prop_assert!(e1.tensor(&e1.inverse()).unwrap().is_trivial());
        prop_assert_eq!(&e1.tensor(&e1.base().trivial_bundle()).unwrap(), e1);
        prop_assert!(validate_picard(e1.base(), &e1.degree(), e1.locals()));
    }

    #[test]
    fn canonical_degree_is_minus_euler(base in base_strategy()) {
        prop_assert_eq!(base.canonical_bundle().degree(), -base.euler_characteristic());
    }

    #[test]
    fn brieskorn_spheres_are_homology_spheres(alphas in small_primes()) {
        let y = SeifertFibration::brieskorn(&alphas).unwrap();
        prop_assert_eq!(y.degree(), Rational::new(BigInt::from(-1), alphas.iter().map(|&a| BigInt::from(a)).product()));
        let pic = y.picard_quotient().unwrap();
        prop_assert!(pic.is_trivial());
        prop_assert_eq!(pic.order, BigInt::one());
        prop_assert_eq!(y.spinc_representatives().unwrap().len(), 1);
    }

    #[test]
    fn hull_recovers_expansion(p in 2i64..40, raw in 0i64..40) {
        let q = coprime_below(p, raw);
        let chain = expand(p, q).unwrap();
        let (d, a) = chain_from_hull(&lattice_hull_oracle(p, q).unwrap()).unwrap();
        prop_assert_eq!(&d[..], chain.denominators());
        prop_assert_eq!(&a[..], chain.coefficients());
        prop_assert_eq!(chain.evaluate(), rat(p, q));
        prop_assert!(chain.coefficients().iter().all(|&a| a >= 2));
    }

    #[test]
    fn greedy_decomposition_is_characterised(p in 2i64..80, raw in 0i64..80, j in 0i64..80) {
        let q = coprime_below(p, raw);
        let j = j % p;
        let chain = expand(p, q).unwrap();
        let d = chain.inner_denominators();
        let x = decompose(j, d);
        prop_assert_eq!(x.reconstruct(d), j);
        for i in 0..d.len() {
            let tail: i64 = (i + 1..d.len()).map(|k| x.coefficients[k] * d[k]).sum();
            prop_assert!(d[i] > tail);
            prop_assert!(x.coefficients[i] >= 0);
        }
    }

    #[test]
    fn closed_form_matches_solver((y, es) in fibration_strategy(4, 30).prop_flat_map(|y| with_bundles(y, 1))) {
        let lat = build_lattice(&y).unwrap();
        let e = &es[0];
        let x = chern_coefficients(&lat, e).unwrap();
        prop_assert_eq!(&x, &solve_coefficients(&lat, e).unwrap());
        prop_assert_eq!(lat.matrix().mul_vec(&x.flatten()).unwrap(), xi_vector(&lat, e).unwrap().flatten());
        prop_assert_eq!(x.central, e.degree() / y.degree());
    }

    #[test]
    fn evaluator_matches_direct((y, es) in fibration_strategy(4, 25).prop_flat_map(|y| with_bundles(y, 4))) {
        let tops: Vec<i64> = y.base().multiplicities().iter().map(|a| a - 1).collect();
        let ev = DimensionEvaluator::new(&y, &tops).unwrap();
        for e in &es {
            prop_assert_eq!(ev.eval(e).unwrap(), dim_y(&y, e).unwrap());
        }
    }

    #[test]
    fn lattice_definite_exactly_when_degree_negative(y in fibration_strategy(4, 15)) {
        let lat = build_lattice(&y).unwrap();
        prop_assert_eq!(lat.is_negative_definite(), y.degree().is_negative());
        prop_assert!(lat.matrix().is_symmetric());
    }

    #[test]
    fn notation_roundtrips((y, es) in fibration_strategy(4, 30).prop_flat_map(|y| with_bundles(y, 1))) {
        let back = parse_manifold(&format_manifold(&y)).unwrap();
        prop_assert_eq!(&back, &y);
        prop_assert_eq!(&parse_bundle(&format_bundle(&es[0]), y.base()).unwrap(), &es[0]);
    }

    #[test]
    fn cs_is_nonpositive_for_negative_fibrations((y, es) in fibration_strategy(4, 30).prop_flat_map(|y| with_bundles(y, 3))) {
        for e in &es {
            let cs = cs_coefficient(&y, e).unwrap();
            if y.degree().is_negative() {
                prop_assert!(!cs.is_positive());
            } else {
                prop_assert!(!cs.is_negative());
            }
        }
    }

    #[test]
    fn floor_half_lands_in_the_last_window((y, es) in fibration_strategy(4, 30).prop_flat_map(|y| with_bundles(y, 2))) {
        let half = y.base().canonical_bundle().degree() / int(2);
        let step = y.degree().abs();
        for e in &es {
            let f = floor_half_canonical(&y, e).unwrap();
            prop_assert!(f.degree() < half);
            prop_assert!(f.degree() + &step >= half);
            let k = ((f.degree() - e.degree()) / y.degree()).to_integer();
            let k: i64 = k.try_into().unwrap();
            prop_assert_eq!(&e.tensor(&y.bundle().power(k)).unwrap(), &f);
            prop_assert!(y.same_spinc_class(e, &f).unwrap());
        }
    }

    #[test]
    fn labels_sit_strictly_below_half_canonical(base in base_strategy()) {
        let half = base.canonical_bundle().degree() / int(2);
        let (inside, boundary) = irreducible_labels(&base).unwrap();
        prop_assert!(inside.iter().all(|e| e.degree() < half && e.background() >= 0));
        prop_assert!(boundary.iter().all(|e| e.degree() == half));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn floer_ranks_ignore_the_order_of_multiplicities(alphas in small_primes(), perm in Just(vec![0usize, 1, 2]).prop_shuffle()) {
        let permuted: Vec<i64> = perm.iter().map(|&i| alphas[i]).collect();
        let a = floer_table(&SeifertFibration::brieskorn(&alphas).unwrap()).unwrap();
        let b = floer_table(&SeifertFibration::brieskorn(&permuted).unwrap()).unwrap();
        prop_assert_eq!(a.ranks, b.ranks);
    }

    #[test]
    fn brieskorn_gradings_are_even_and_nonnegative(alphas in small_primes()) {
        let y = SeifertFibration::brieskorn(&alphas).unwrap();
        let table = floer_table(&y).unwrap();
        prop_assert_eq!(table.total_rank() % 2, 0);
        for g in &table.generators {
            prop_assert!(g.grading.is_even() && !g.grading.is_negative());
            if g.locals.iter().all(|&x| x == 0) {
                prop_assert!(g.grading.is_zero());
            }
        }
        let set = enumerate_components(&y, None).unwrap();
        prop_assert_eq!(set.reducibles().count(), 1);
        prop_assert!(set.components.iter().all(|c| c.kind == ComponentKind::Reducible || c.complex_dim == 0));
    }
}

#[test]
fn solver_rejects_singular_systems() {
    let mut m = RatMatrix::zeros(2, 2);
    m[(0, 0)] = int(1);
    m[(0, 1)] = int(2);
    m[(1, 0)] = int(2);
    m[(1, 1)] = int(4);
    assert!(solve_exact(&m, &[int(1), int(1)]).is_err());
}
