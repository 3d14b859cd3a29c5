use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use signed_brauer::groups::{cycle_type, element_at, group_order, permutation_unrank};
use signed_brauer::hyperoct::star;
use signed_brauer::{EdgeSign, Permutation, SignedPermutation};

fn all(n: usize) -> Vec<SignedPermutation> {
    (0..group_order(n).unwrap()).map(|r| element_at(n, r)).collect()
}

fn uniform_signs(n: usize, sign: EdgeSign) -> Vec<SignedPermutation> {
    let count: u128 = (1..=n as u128).product();
    (0..count)
        .map(|r| SignedPermutation::new(permutation_unrank(n, r), vec![sign; n]).unwrap())
        .collect()
}

fn random_element(n: usize, rng: &mut impl Rng) -> SignedPermutation {
    let mut images: Vec<usize> = (1..=n).collect();
    images.shuffle(rng);
    let signs = (0..n)
        .map(|_| if rng.gen() { EdgeSign::Negative } else { EdgeSign::Positive })
        .collect();
    SignedPermutation::new(Permutation::from_images(images).unwrap(), signs).unwrap()
}

// embedding straight from the edge rules, indexing the halves by star()
fn embed_by_edge_rule(s: &SignedPermutation) -> Permutation {
    let n = s.n();
    let mut images = vec![0; 2 * n];
    for r in 1..=n {
        let target = s.underlying().apply(r) + n; // bottom vertex s_k
        let r_star = star(r, n).unwrap();
        let (from_r, from_r_star) = match s.sign(r) {
            EdgeSign::Negative => (target, star(target, n).unwrap()),
            EdgeSign::Positive => (star(target, n).unwrap(), target),
        };
        images[r - 1] = from_r;
        images[r_star - 1] = from_r_star;
    }
    Permutation::from_images(images).unwrap()
}

#[test]
fn embedding_matches_edge_rules() {
    for n in 1..=4 {
        for s in all(n) {
            assert_eq!(s.embed(), embed_by_edge_rule(&s), "{s}");
        }
    }
}

#[test]
fn homomorphism_exhaustive() {
    for n in 1..=3 {
        let elements = all(n);
        for a in &elements {
            for b in &elements {
                let lhs = a.mul(b).unwrap().embed();
                let rhs = a.embed().compose(&b.embed()).unwrap();
                assert_eq!(lhs, rhs, "{a} * {b}");
            }
        }
    }
}

#[test]
fn homomorphism_random() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..20_000 {
        let n = rng.gen_range(1..=12);
        let a = random_element(n, &mut rng);
        let b = random_element(n, &mut rng);
        assert_eq!(a.mul(&b).unwrap().embed(), a.embed().compose(&b.embed()).unwrap());
    }
}

#[test]
fn opposite_convention_is_not_a_homomorphism() {
    // with right-to-left composition the n = 2 check already fails
    let elements = all(2);
    let fails = elements.iter().any(|a| {
        elements
            .iter()
            .any(|b| a.mul(b).unwrap().embed() != b.embed().compose(&a.embed()).unwrap())
    });
    assert!(fails);
}

#[test]
fn embedding_is_injective() {
    for n in 1..=4 {
        let images: HashSet<Permutation> = all(n).iter().map(SignedPermutation::embed).collect();
        assert_eq!(images.len() as u128, group_order(n).unwrap());
    }
    assert_eq!(all(4).len(), 384);
}

#[test]
fn group_laws() {
    for n in 1..=3 {
        for s in all(n) {
            assert!(s.mul(&s.inverse()).unwrap().is_identity());
            assert_eq!(SignedPermutation::from_diagram(&s.to_diagram()).unwrap(), s);
            assert_eq!(SignedPermutation::from_embedded(&s.embed()).unwrap(), s);
            assert_eq!(s.to_string().parse::<SignedPermutation>().unwrap(), s);
        }
    }
}

#[test]
fn diagram_product_matches_embedding() {
    for n in 1..=3 {
        let elements = all(n);
        for a in &elements {
            for b in &elements {
                let prod = a.to_diagram().compose(&b.to_diagram()).unwrap();
                let via_diagram = SignedPermutation::from_diagram(&prod.diagram).unwrap().embed();
                assert_eq!(via_diagram, a.embed().compose(&b.embed()).unwrap());
            }
        }
    }
}

#[test]
fn parity_bridge_exhaustive() {
    for n in 1..=6 {
        for s in all(n) {
            assert_eq!(s.embed().parity().is_even(), s.neg_count() % 2 == 0, "{s}");
        }
    }
}

#[test]
fn parity_bridge_random() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for _ in 0..100_000 {
        let n = rng.gen_range(1..=16);
        let s = random_element(n, &mut rng);
        assert_eq!(s.embed().parity().is_even(), s.neg_count() % 2 == 0, "{s}");
    }
}

#[test]
fn all_positive_doubles_cycle_type() {
    for n in 1..=6 {
        for s in uniform_signs(n, EdgeSign::Positive) {
            let image = s.embed();
            assert!(image.parity().is_even());
            assert_eq!(cycle_type(&image), cycle_type(s.underlying()).doubled());
        }
    }
}

#[test]
fn all_negative_structure() {
    for n in 1..=7 {
        for s in uniform_signs(n, EdgeSign::Negative) {
            let image = s.embed();
            let decomposition = image.cycles();
            assert_eq!(decomposition.fixed_point_count(), 0);
            assert!(decomposition.cycles().iter().all(|c| c.len() % 2 == 0));
            assert_eq!(decomposition.cycles().len() % 2, n % 2);
            for c in decomposition.cycles() {
                for j in 0..c.len() {
                    assert_ne!(c[j] <= n, c[(j + 1) % c.len()] <= n, "{image}");
                }
            }
            if n % 2 == 0 {
                assert_ne!(cycle_type(&image).parts(), [2 * n]);
                assert!(image.parity().is_even());
            }
        }
    }
}

#[test]
fn two_strand_image_set() {
    let expected: HashSet<String> = [
        "e",
        "(2 4)",
        "(1 3)",
        "(1 3)(2 4)",
        "(1 2)(3 4)",
        "(1 2 3 4)",
        "(1 4 3 2)",
        "(1 4)(2 3)",
    ]
    .into_iter()
    .map(String::from)
    .collect();
    let images: HashSet<String> = all(2).iter().map(|s| s.embed().format_cycles()).collect();
    assert_eq!(images, expected);
}
