use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use signed_brauer::bsgs::{embedded_generated, standard_generators, GeneratorSet};
use signed_brauer::groups::{
    enumerate_even, enumerate_signed, enumerate_signed_with_cap, even_binomial_count, factorial, verify,
    verify_all, Claim, Oracle, VerifyOptions,
};
use signed_brauer::{Bsgs, Permutation, SignedPermutation};

fn binomial(n: u128, k: u128) -> u128 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn even_filters_agree() {
    for n in 1..=6 {
        let by_signs: HashSet<SignedPermutation> =
            enumerate_signed(n).unwrap().filter(|s| s.neg_count() % 2 == 0).collect();
        let by_parity: HashSet<SignedPermutation> =
            enumerate_signed(n).unwrap().filter(|s| s.embed().parity().is_even()).collect();
        let streamed: HashSet<SignedPermutation> = enumerate_even(n).unwrap().collect();
        assert_eq!(by_signs, by_parity);
        assert_eq!(by_signs, streamed);
        let expected = even_binomial_count(n).unwrap() * factorial(n).unwrap();
        assert_eq!(streamed.len() as u128, expected);
        assert_eq!(expected, (1u128 << (n - 1)) * factorial(n).unwrap());
    }
}

#[test]
fn even_binomial_count_matches_direct_sum() {
    for n in 1..=60u128 {
        let direct: u128 = (0..=n).step_by(2).map(|k| binomial(n, k)).sum();
        assert_eq!(even_binomial_count(n as usize).unwrap(), direct);
        assert_eq!(direct, 1 << (n - 1));
    }
}

#[test]
fn enumeration_is_deterministic_and_distinct() {
    for n in 1..=5 {
        let first: Vec<SignedPermutation> = enumerate_signed(n).unwrap().collect();
        let second: Vec<SignedPermutation> = enumerate_signed(n).unwrap().collect();
        assert_eq!(first, second);
        let distinct: HashSet<&SignedPermutation> = first.iter().collect();
        assert_eq!(distinct.len(), first.len());
    }
}

#[test]
fn even_subgroup_images_for_small_n() {
    let images: HashSet<String> = enumerate_even(2).unwrap().map(|s| s.embed().format_cycles()).collect();
    let expected: HashSet<String> = ["e", "(1 3)(2 4)", "(1 2)(3 4)", "(1 4)(2 3)"].into_iter().map(String::from).collect();
    assert_eq!(images, expected);

    let images: HashSet<Permutation> = enumerate_even(3).unwrap().map(|s| s.embed()).collect();
    assert_eq!(images.len(), 24);
    let printed = [
        "e",
        "(1 4)(2 5)",
        "(1 4)(3 6)",
        "(2 5)(3 6)",
        "(1 2)(4 5)",
        "(1 5)(2 4)",
        "(2 6)(3 5)",
        "(2 3)(5 6)",
        "(1 3)(4 6)",
        "(1 6)(3 4)",
        "(1 2 6)(3 4 5)",
        "(1 5 3)(2 6 4)",
        "(1 3 2)(4 6 5)",
        "(1 3 5)(2 4 6)",
    ];
    for text in printed {
        let p = Permutation::parse_cycles(text, 6).unwrap();
        assert!(images.contains(&p), "{text} missing");
    }
}

#[test]
fn bsgs_agrees_with_enumeration() {
    for n in 2..=5 {
        let group = embedded_generated(n, GeneratorSet::Even).unwrap();
        assert_eq!(group.order(), enumerate_even(n).unwrap().len() as u128);
        for s in enumerate_signed(n).unwrap() {
            assert_eq!(group.contains(&s.embed()).unwrap(), s.neg_count() % 2 == 0, "{s}");
        }
        let full = embedded_generated(n, GeneratorSet::Full).unwrap();
        assert_eq!(full.order(), enumerate_signed(n).unwrap().len() as u128);
    }
}

#[test]
fn generated_groups_match_enumeration() {
    // closure of the standard generators under multiplication, by BFS
    for n in 2..=5 {
        for (which, count) in [(GeneratorSet::Full, 1u128 << n), (GeneratorSet::Even, 1u128 << (n - 1))] {
            let gens = standard_generators(n, which).unwrap();
            let mut seen = HashSet::from([SignedPermutation::identity(n)]);
            let mut frontier = vec![SignedPermutation::identity(n)];
            while let Some(x) = frontier.pop() {
                for g in &gens {
                    let y = x.mul(g).unwrap();
                    if seen.insert(y.clone()) {
                        frontier.push(y);
                    }
                }
            }
            assert_eq!(seen.len() as u128, count * factorial(n).unwrap());
            let target: HashSet<SignedPermutation> = match which {
                GeneratorSet::Full => enumerate_signed(n).unwrap().collect(),
                GeneratorSet::Even => enumerate_even(n).unwrap().collect(),
            };
            assert_eq!(seen, target);
        }
    }
}

#[test]
fn even_orders_up_to_ten() {
    for n in 2..=10 {
        let group = embedded_generated(n, GeneratorSet::Even).unwrap();
        let expected = (1u128 << (n - 1)) * factorial(n).unwrap();
        assert_eq!(group.order(), expected, "n = {n}");
        assert_eq!(factorial(2 * n).unwrap() % group.order(), 0);
    }
    assert_eq!(embedded_generated(10, GeneratorSet::Even).unwrap().order(), 1_857_945_600);
}

#[test]
fn order_divides_degree_factorial_random_groups() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for degree in 2..=9 {
        for k in 1..=3 {
            let gens: Vec<Permutation> = (0..k)
                .map(|_| {
                    let mut images: Vec<usize> = (1..=degree).collect();
                    images.shuffle(&mut rng);
                    Permutation::from_images(images).unwrap()
                })
                .collect();
            let group = Bsgs::build(degree, &gens).unwrap();
            assert_eq!(factorial(degree).unwrap() % group.order(), 0);
            for g in &gens {
                assert!(group.contains(g).unwrap());
                let (residue, _) = group.sift(g).unwrap();
                assert!(residue.is_identity());
            }
            // products of generators are members too
            let product = gens.iter().fold(Permutation::identity(degree), |acc, g| &acc * g);
            assert!(group.contains(&product).unwrap());
        }
    }
}

#[test]
fn bsgs_order_matches_brute_force_closure() {
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    for degree in 2..=6 {
        for _ in 0..5 {
            let gens: Vec<Permutation> = (0..2)
                .map(|_| {
                    let mut images: Vec<usize> = (1..=degree).collect();
                    images.shuffle(&mut rng);
                    Permutation::from_images(images).unwrap()
                })
                .collect();
            let mut seen = HashSet::from([Permutation::identity(degree)]);
            let mut frontier = vec![Permutation::identity(degree)];
            while let Some(x) = frontier.pop() {
                for g in &gens {
                    let y = &x * g;
                    if seen.insert(y.clone()) {
                        frontier.push(y);
                    }
                }
            }
            let group = Bsgs::build(degree, &gens).unwrap();
            assert_eq!(group.order(), seen.len() as u128);
            let count: u128 = (1..=degree as u128).product();
            let members = (0..count)
                .map(|r| signed_brauer::groups::permutation_unrank(degree, r))
                .filter(|p| group.contains(p).unwrap())
                .count();
            assert_eq!(members, seen.len());
        }
    }
}

#[test]
fn all_claims_pass_up_to_six() {
    let opts = VerifyOptions {
        jobs: 4,
        ..Default::default()
    };
    assert!(verify_all(1, &opts).is_err());
    for n in 2..=6 {
        for r in verify_all(n, &opts).unwrap() {
            assert!(r.passed(), "{r}");
            assert!(r.checked > 0, "{r}");
        }
    }
}

#[test]
fn bsgs_oracle_runs_membership_checks() {
    let opts = VerifyOptions {
        oracle: Oracle::Bsgs,
        ..Default::default()
    };
    for claim in [Claim::Thm31, Claim::Thm32Intersection, Claim::Thm32Order] {
        let r = verify(claim, 4, &opts).unwrap();
        assert!(r.passed(), "{r}");
    }
    let r = verify(Claim::Thm32Order, 10, &opts).unwrap();
    assert!(r.notes.contains(&"order=1857945600".to_string()), "{:?}", r.notes);
}

#[test]
fn counts_per_domain() {
    let opts = VerifyOptions::default();
    assert_eq!(verify(Claim::Lem21, 5, &opts).unwrap().checked, 120);
    assert_eq!(verify(Claim::Cor28, 6, &opts).unwrap().checked, 720);
    assert_eq!(verify(Claim::Thm31, 6, &opts).unwrap().checked, 46_080);
    assert_eq!(verify(Claim::Cor34, 10, &opts).unwrap().checked, 9);
}

#[test]
fn over_cap_enumeration_is_an_error() {
    assert!(enumerate_signed_with_cap(9, 8).is_err());
    let opts = VerifyOptions {
        cap: 3,
        samples: 1000,
        ..Default::default()
    };
    let r = verify(Claim::Lem26, 4, &opts).unwrap();
    assert_eq!(r.checked, 1000);
}
