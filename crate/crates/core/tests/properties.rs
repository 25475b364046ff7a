use cmspace::catalogue::{
    a4_ring, listed_basis, bidegree, fourier, involution, relations, BracketTable, SetName,
};
use cmspace::exactmat::{int, random_int_matrix, RationalMatrix, Scalar};
use cmspace::polyring::{drop_lower_terms, Monomial, Polynomial};
use cmspace::presentation::{certification_order, certify_gb_cm4};
use cmspace::traceword::{
    bracket_sums, eval_wordsum, necklace_bracket, poisson_numeric, CyclicWord, Letter, TracePoly,
    WordSum,
};
use cmspace::varieties::{generator_values, generators_at, random_cm_point, random_com_point};
use num_traits::Zero;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn word() -> impl Strategy<Value = CyclicWord> {
    prop::collection::vec(prop::bool::ANY, 1..6).prop_map(|bits| {
        CyclicWord::new(bits.into_iter().map(|b| if b { Letter::X } else { Letter::Y }).collect())
    })
}

fn small_matrix(n: usize) -> impl Strategy<Value = RationalMatrix> {
    prop::collection::vec(-3i64..=3, n * n).prop_map(move |v| RationalMatrix::from_i64(n, n, &v))
}

fn a4_poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(0u16..=2, 14), -5i64..=5), 1..5).prop_map(|terms| {
        let ring = a4_ring();
        Polynomial::from_terms(
            &ring,
            terms
                .into_iter()
                .map(|(e, c)| (Monomial::from_exponents(&e), int(c))),
        )
    })
}

fn bideg(w: &CyclicWord) -> (usize, usize) {
    (w.count(Letter::X), w.count(Letter::Y))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn bracket_is_antisymmetric_and_graded(u in word(), v in word()) {
        let uv = necklace_bracket(&u, &v);
        let vu = necklace_bracket(&v, &u);
        prop_assert!((&uv + &vu).is_zero());
        let (p, q) = bideg(&u);
        let (r, s) = bideg(&v);
        for w in uv.terms().keys() {
            prop_assert_eq!(bideg(w), (p + r - 1, q + s - 1));
        }
    }

    #[test]
    fn numeric_bracket_is_the_necklace_bracket(
        u in word(), v in word(), x in small_matrix(3), y in small_matrix(3)
    ) {
        let fu = WordSum::word(u.clone());
        let fv = WordSum::word(v.clone());
        let lhs = poisson_numeric(&TracePoly::from(&fu), &TracePoly::from(&fv), &x, &y).unwrap();
        let rhs = eval_wordsum(&bracket_sums(&fu, &fv), &x, &y).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn top_components_multiply(f in a4_poly(), g in a4_poly()) {
        prop_assume!(!f.is_zero() && !g.is_zero());
        prop_assert_eq!(drop_lower_terms(&(&f * &g)), &drop_lower_terms(&f) * &drop_lower_terms(&g));
    }

    #[test]
    fn fourier_has_order_four(f in a4_poly()) {
        let f2 = fourier(&fourier(&f));
        prop_assert_eq!(fourier(&fourier(&f2)), f.clone());
        prop_assert_eq!(involution(&involution(&f)), f);
    }
}

#[test]
fn generators_are_conjugation_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut done = 0;
    while done < 50 {
        let g = random_int_matrix(&mut rng, 4, 3);
        let Some(gi) = g.inverse() else { continue };
        let x = random_int_matrix(&mut rng, 4, 5);
        let y = random_int_matrix(&mut rng, 4, 5);
        let before = generator_values(&x, &y).unwrap();
        let after = generator_values(&(&(&g * &x) * &gi), &(&(&g * &y) * &gi)).unwrap();
        assert_eq!(before.values, after.values);
        done += 1;
    }
}

#[test]
fn table_is_antisymmetric_and_graded() {
    let t = BracketTable::standard();
    let ring = t.ring().clone();
    let w = ring.weights().to_vec();
    for i in 1..=14 {
        assert!(t.get(i, i).unwrap().is_zero());
        for j in 1..=14 {
            let b = t.get(i, j).unwrap();
            assert_eq!(&b + &t.get(j, i).unwrap(), Polynomial::zero(&ring));
            if let Some(d) = b.weighted_degree() {
                assert!(d + 2 <= w[i - 1] + w[j - 1], "{{a{i},a{j}}}");
            }
            let (p, q) = bidegree(i).unwrap();
            let (r, s) = bidegree(j).unwrap();
            // bidegree (p + r - 1, q + s - 1) has total weight w_i + w_j - 2
            assert_eq!(p + q + r + s, w[i - 1] + w[j - 1]);
        }
    }
}

#[test]
fn every_catalogue_vanishes_on_its_variety() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let cases = [
        (SetName::Cm2, 2),
        (SetName::Cm3(int(1)), 3),
        (SetName::Cm4, 4),
        (SetName::Cm4Extra, 4),
    ];
    for (set, n) in cases {
        let rel = relations(&set);
        for _ in 0..5 {
            let pt = random_cm_point(&mut rng, n);
            let vals = generators_at(&pt).unwrap().values;
            for (name, p) in &rel.entries {
                assert!(p.eval(&vals).is_zero(), "{set} {name}");
            }
        }
    }
    let com = relations(&SetName::Com4);
    for _ in 0..5 {
        let pt = random_com_point(&mut rng, 4);
        let vals = generators_at(&pt).unwrap().values;
        for (name, p) in &com.entries {
            assert!(p.eval(&vals).is_zero(), "COM4 {name}");
        }
    }
}

#[test]
fn points_off_the_variety_are_detected() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let basis = listed_basis();
    let x = random_int_matrix(&mut rng, 4, 5);
    let y = random_int_matrix(&mut rng, 4, 5);
    let vals = generator_values(&x, &y).unwrap().values;
    assert!(basis.entries.iter().any(|(_, p)| !p.eval(&vals).is_zero()));
}

#[test]
fn certification_is_reproducible() {
    let ord = certification_order();
    let a = certify_gb_cm4(&ord, true);
    let b = certify_gb_cm4(&ord, true);
    assert_eq!(a.completion, b.completion);
    assert_eq!(a.matches, b.matches);
    assert_eq!(a.criterion.failures.len(), b.criterion.failures.len());
}

#[test]
fn cm_points_carry_a_rank_one_witness() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for n in 2..=4 {
        let pt = random_cm_point(&mut rng, n);
        let q = pt.witness.as_ref().unwrap();
        assert!(q.residual().is_zero());
        assert_eq!(q.wv(), Scalar::from_integer(n.into()));
    }
}
