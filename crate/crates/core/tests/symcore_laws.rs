//! Algebraic laws of the core layer, checked on random maps and simplices
//! and exhaustively over the corpus.

mod common;

use proptest::prelude::*;

use common::{corpus, group, listable};
use pgsym_core::constructors::GroupTable;
use pgsym_core::symcore::{
    closure_generate, compose_maps, factor_epi_mono, spine_eval, FiniteMap, SimplexMatrix, Spine,
};

fn map_strategy(m: usize, n: usize) -> impl Strategy<Value = FiniteMap> {
    proptest::collection::vec(0..=n, m + 1).prop_map(move |v| FiniteMap::new(n, v).unwrap())
}

/// Three composable maps `[a] -> [b] -> [c] -> [d]`, degrees at most 5.
fn composable_triple() -> impl Strategy<Value = (FiniteMap, FiniteMap, FiniteMap)> {
    (0usize..=5, 0usize..=5, 0usize..=5, 0usize..=5)
        .prop_flat_map(|(a, b, c, d)| (map_strategy(a, b), map_strategy(b, c), map_strategy(c, d)))
}

/// A nondegenerate simplex of the S₃ nerve, by degree and index.
fn s3_simplex() -> impl Strategy<Value = SimplexMatrix> {
    let s3 = group(&GroupTable::symmetric3());
    let all: Vec<SimplexMatrix> = (0..=s3.truncation())
        .flat_map(|k| s3.nondegenerate(k).iter().cloned().collect::<Vec<_>>())
        .collect();
    proptest::sample::select(all)
}

proptest! {
    #[test]
    fn composition_is_associative((f, g, h) in composable_triple()) {
        let left = compose_maps(&h, &compose_maps(&g, &f).unwrap()).unwrap();
        let right = compose_maps(&compose_maps(&h, &g).unwrap(), &f).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn identities_are_neutral(f in (0usize..=6, 0usize..=6).prop_flat_map(|(m, n)| map_strategy(m, n))) {
        let (m, n) = (f.source_degree(), f.target_degree());
        prop_assert_eq!(compose_maps(&FiniteMap::identity(n), &f).unwrap(), f.clone());
        prop_assert_eq!(compose_maps(&f, &FiniteMap::identity(m)).unwrap(), f);
    }

    #[test]
    fn action_is_contravariantly_functorial(
        (x, alpha, beta) in (s3_simplex(), 0usize..=5, 0usize..=5).prop_flat_map(|(x, m, l)| {
            let n = x.degree();
            (Just(x), map_strategy(m, n), map_strategy(l, m))
        })
    ) {
        // (x · alpha) · beta = x · (alpha ∘ beta)
        let stepwise = x.act(&alpha).unwrap().act(&beta).unwrap();
        let composite = x.act(&compose_maps(&alpha, &beta).unwrap()).unwrap();
        prop_assert_eq!(stepwise, composite);
    }

    #[test]
    fn epi_mono_factorization(f in (0usize..=7, 0usize..=7).prop_flat_map(|(m, n)| map_strategy(m, n))) {
        let (epi, mono) = factor_epi_mono(&f);
        prop_assert!(epi.is_surjective());
        prop_assert!(mono.is_injective());
        prop_assert_eq!(compose_maps(&mono, &epi).unwrap(), f);
    }

    #[test]
    fn standard_and_starry_spines_read_the_matrix(x in s3_simplex()) {
        let n = x.degree();
        prop_assume!(n >= 1);
        let standard = spine_eval(&x, &Spine::standard(n)).unwrap();
        prop_assert_eq!(standard.components, x.superdiagonal());
        let starry = spine_eval(&x, &Spine::starry(n)).unwrap();
        prop_assert_eq!(starry.components, x.first_row_tail());
    }

    #[test]
    fn members_stay_members_under_any_map(
        x in s3_simplex(),
        seed in proptest::collection::vec(any::<u16>(), 1..=6),
    ) {
        let s3 = group(&GroupTable::symmetric3());
        let n = x.degree();
        let values: Vec<usize> = seed.iter().map(|&s| s as usize % (n + 1)).collect();
        let alpha = FiniteMap::new(n, values).unwrap();
        prop_assert!(s3.contains(&s3.apply_map(&x, &alpha).unwrap()));
    }
}

#[test]
fn closure_generation_is_idempotent_on_the_corpus() {
    for i in corpus() {
        let x = &i.set;
        let generators = (2..=x.truncation()).flat_map(|k| x.nondegenerate(k).iter().cloned());
        let again = closure_generate(x.edges(), x.truncation(), generators).unwrap();
        assert_eq!(&again, x, "{}", i.name);
    }
}

#[test]
fn listed_levels_match_counts_and_membership() {
    for i in listable(5_000) {
        let x = &i.set;
        for n in 0..=x.truncation() {
            let level = x.materialize(n);
            assert_eq!(
                level.len() as u128,
                x.simplex_count(n),
                "{} level {n}",
                i.name
            );
            assert_eq!(
                x.simplices(n).count(),
                level.len(),
                "{} repeats at level {n}",
                i.name
            );
            assert!(level.iter().all(|s| x.contains(s)));
        }
        let explicit = x.to_explicit();
        assert!(explicit.validate().is_valid(), "{}", i.name);
        assert_eq!(&explicit.to_truncated().unwrap(), x, "{}", i.name);
    }
}
