//! Algebraic laws of the operator algebra, as properties over random
//! operators and exhaustively on the smallest dimensions.

use proptest::prelude::*;

use lbit::stats;
use lbit::{AmbientConfig, CircleCoord, CoSequence, Q2Exponent, RootFamily, Sign, SignedPermOp};

fn sign_vec(dim: usize) -> impl Strategy<Value = Vec<Sign>> {
    prop::collection::vec(any::<bool>(), dim).prop_map(|bits| {
        bits.into_iter()
            .map(|b| if b { Sign::Plus } else { Sign::Minus })
            .collect()
    })
}

fn signed_perm(dim: usize) -> impl Strategy<Value = SignedPermOp> {
    let targets = Just((0..dim).collect::<Vec<usize>>()).prop_shuffle();
    (targets, sign_vec(dim))
        .prop_map(|(t, s)| SignedPermOp::from_parts(t, s).expect("valid by construction"))
}

fn cosequence(dim: usize) -> impl Strategy<Value = CoSequence> {
    sign_vec(dim).prop_map(|s| CoSequence::new("a", s).expect("power of two"))
}

fn dims() -> impl Strategy<Value = usize> {
    prop::sample::select(vec![2usize, 4, 8, 16, 64, 256])
}

fn is_valid(op: &SignedPermOp) -> bool {
    SignedPermOp::from_parts(op.targets().to_vec(), op.signs().to_vec()).is_ok()
}

proptest! {
    #[test]
    fn compose_preserves_validity_and_identity_is_neutral(
        (a, b) in dims().prop_flat_map(|d| (signed_perm(d), signed_perm(d)))
    ) {
        let c = a.compose(&b).unwrap();
        prop_assert!(is_valid(&c));
        let id = SignedPermOp::identity(a.dim());
        prop_assert_eq!(a.compose(&id).unwrap(), a.clone());
        prop_assert_eq!(id.compose(&a).unwrap(), a);
    }

    #[test]
    fn compose_is_associative(
        (a, b, c) in dims().prop_flat_map(|d| (signed_perm(d), signed_perm(d), signed_perm(d)))
    ) {
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn adjoint_is_a_two_sided_inverse_and_involution(a in dims().prop_flat_map(signed_perm)) {
        let id = SignedPermOp::identity(a.dim());
        prop_assert_eq!(a.adjoint().compose(&a).unwrap(), id.clone());
        prop_assert_eq!(a.compose(&a.adjoint()).unwrap(), id);
        prop_assert_eq!(a.adjoint().adjoint(), a.clone());
        prop_assert!(a.is_unitary());
    }

    #[test]
    fn apply_distributes_over_compose(
        (a, b, s) in dims().prop_flat_map(|d| (signed_perm(d), signed_perm(d), cosequence(d)))
    ) {
        let chained = a.apply(&b.apply(&s).unwrap()).unwrap();
        let composed = a.compose(&b).unwrap().apply(&s).unwrap();
        prop_assert_eq!(chained.signs(), composed.signs());
    }

    #[test]
    fn bar_replication_is_a_homomorphism(
        (a, b) in prop::sample::select(vec![2usize, 4, 8]).prop_flat_map(|d| (signed_perm(d), signed_perm(d)))
    ) {
        let ambient = a.dim() * 8;
        let lhs = a.compose(&b).unwrap().bar_replicate(ambient).unwrap();
        let rhs = a
            .bar_replicate(ambient)
            .unwrap()
            .compose(&b.bar_replicate(ambient).unwrap())
            .unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn plus_signs_are_conserved_onto_all_plus(a in dims().prop_flat_map(signed_perm)) {
        let base = CoSequence::all_plus("a", a.dim()).unwrap();
        let out = a.apply(&base).unwrap();
        let plus = out.signs().iter().filter(|s| s.is_plus()).count();
        prop_assert_eq!(plus, a.plus_sign_count());
    }

    #[test]
    fn negation_flips_agreement(
        (s1, s2) in dims().prop_flat_map(|d| (cosequence(d), cosequence(d)))
    ) {
        let direct = stats::agreement(&s1, &s2).unwrap();
        let flipped = stats::agreement(&s1, &s2.negate()).unwrap();
        let total = s1.len() as u64;
        prop_assert_eq!(direct.agree_count + flipped.agree_count, total);
        // Symmetry of the count.
        let swapped = stats::agreement(&s2, &s1).unwrap();
        prop_assert_eq!(direct.agree_count, swapped.agree_count);
    }

    #[test]
    fn dispersion_product_never_exceeds_a_quarter(
        (s1, s2) in dims().prop_flat_map(|d| (cosequence(d), cosequence(d)))
    ) {
        prop_assert!(stats::dispersion(&s1, &s2).within_quarter_bound());
    }

    #[test]
    fn frequency_law_on_random_lattice_points(j in 1u32..=12, num in 0u64..128) {
        let config = AmbientConfig::new(3).unwrap();
        let family = RootFamily::build(config);
        let alpha = Q2Exponent::from_parts(num, config.max_resolution(), &config).unwrap();
        let coord = CircleCoord::new(j, &config).unwrap();
        let base = CoSequence::all_plus("a", config.ambient_len() as usize).unwrap();
        let out = family.pow(coord, &alpha).unwrap().apply(&base).unwrap();
        prop_assert_eq!(stats::frequency(&out).frequency, alpha.plus_frequency());
    }

    #[test]
    fn exponent_arithmetic_matches_rationals(
        (n1, r1, n2, r2) in (0u64..64, 0u32..5, 0u64..64, 0u32..5)
    ) {
        let config = AmbientConfig::new(3).unwrap();
        let a = Q2Exponent::from_parts(n1, r1, &config).unwrap();
        let b = Q2Exponent::from_parts(n2, r2, &config).unwrap();
        let sum = a.add(&b);
        let direct = Q2Exponent::from_rational(&(a.as_rational() + b.as_rational()), &config).unwrap();
        prop_assert_eq!(sum, direct);
        prop_assert_eq!(a.sub(&b).add(&b), a);
    }
}

/// Exhaustive closure and group checks on the smallest dimensions: every
/// signed permutation operator of dim 2 and 4, all pairs composed.
#[test]
fn exhaustive_small_dimension_group_laws() {
    fn all_ops(dim: usize) -> Vec<SignedPermOp> {
        fn perms(items: Vec<usize>) -> Vec<Vec<usize>> {
            if items.len() <= 1 {
                return vec![items];
            }
            let mut out = Vec::new();
            for i in 0..items.len() {
                let mut rest = items.clone();
                let head = rest.remove(i);
                for mut tail in perms(rest) {
                    tail.insert(0, head);
                    out.push(tail);
                }
            }
            out
        }
        let mut out = Vec::new();
        for perm in perms((0..dim).collect()) {
            for mask in 0u32..(1 << dim) {
                let signs = (0..dim)
                    .map(|k| {
                        if mask & (1 << k) != 0 {
                            Sign::Minus
                        } else {
                            Sign::Plus
                        }
                    })
                    .collect();
                out.push(SignedPermOp::from_parts(perm.clone(), signs).unwrap());
            }
        }
        out
    }

    let dim2 = all_ops(2);
    assert_eq!(dim2.len(), 8);
    for a in &dim2 {
        for b in &dim2 {
            let c = a.compose(b).unwrap();
            assert!(SignedPermOp::from_parts(c.targets().to_vec(), c.signs().to_vec()).is_ok());
            for d in &dim2 {
                assert_eq!(
                    a.compose(b).unwrap().compose(d).unwrap(),
                    a.compose(&b.compose(d).unwrap()).unwrap()
                );
            }
        }
    }

    let dim4 = all_ops(4);
    assert_eq!(dim4.len(), 384);
    let id = SignedPermOp::identity(4);
    for a in &dim4 {
        assert_eq!(a.adjoint().compose(a).unwrap(), id);
        for b in &dim4 {
            let c = a.compose(b).unwrap();
            assert!(SignedPermOp::from_parts(c.targets().to_vec(), c.signs().to_vec()).is_ok());
        }
    }
}
