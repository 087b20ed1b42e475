//! Acceptance suite: one test per criterion, each printing a PASS line with
//! the sizes it covered (run with `--nocapture` to see them). Tolerances
//! are pinned in code: algebraic identities are exact (zero tolerance),
//! Monte-Carlo estimates use exact-rational 3σ bounds, and the numeric
//! cross-checks compare 60 decimal digits.

#[path = "acceptance/numeric.rs"]
mod numeric;

use std::process::Command;
use std::time::Instant;

use num_rational::BigRational;
use num_traits::One;

use lbit::celestial;
use lbit::kernels;
use lbit::lbit::entangled_pair;
use lbit::rational::{
    big_ratio, combine_cosines, niven_classify, sine_partner, CombineBranch, CosineClass,
    Definedness, RationalAngle, UndefinedReason,
};
use lbit::stats;
use lbit::{AmbientConfig, CircleCoord, CoSequence, Q2Exponent, RootFamily, Sign, SignedPermOp};

use lbit_cli::experiments;

fn pass(n: u32, name: &str, detail: impl AsRef<str>) {
    println!(
        "[acceptance] criterion {n:>2} ({name}): PASS — {}",
        detail.as_ref()
    );
}

fn config(n_tot: u32) -> AmbientConfig {
    AmbientConfig::new(n_tot).expect("supported n_tot")
}

fn all_exponents(cfg: &AmbientConfig, cap: u32) -> Vec<Q2Exponent> {
    let res = cfg.max_resolution().min(cap);
    (0..(4u64 << res))
        .map(|num| Q2Exponent::from_parts(num, res, cfg).expect("on lattice"))
        .collect()
}

fn all_coords(cfg: &AmbientConfig) -> Vec<CircleCoord> {
    (1..=cfg.circle_len())
        .map(|j| CircleCoord::new(j, cfg).expect("in range"))
        .collect()
}

#[test]
fn criterion_01_operator_algebra() {
    let t0 = Instant::now();
    let mut powers_checked = 0usize;

    for n_tot in 2..=4u32 {
        let cfg = config(n_tot);
        let family = RootFamily::build(cfg);
        let dim = cfg.operator_dim();
        let minus_one = SignedPermOp::identity(dim).negate();

        // Every member squares to -1; adjoint∘self = 1.
        for j in 1..=family.len() as u32 {
            let e = family.member(j).unwrap();
            assert_eq!(e.compose(e).unwrap(), minus_one, "n_tot={n_tot} E_{j}^2");
            assert_eq!(
                e.adjoint().compose(e).unwrap(),
                SignedPermOp::identity(dim),
                "n_tot={n_tot} E_{j} adjoint"
            );
        }
        // Every quaternionic triple of the partition.
        for j in 1..=cfg.circle_m() {
            let rep = family.quaternion_triple(j).unwrap();
            assert!(rep.holds(), "n_tot={n_tot} triple {j}: {:?}", rep.failures);
        }

        // Fractional powers: adjoint∘pow == 1 and adjoint == pow(-α).
        let ambient_id = SignedPermOp::identity(cfg.ambient_len() as usize);
        let (exps, coords): (Vec<Q2Exponent>, Vec<CircleCoord>) = if n_tot <= 3 {
            (all_exponents(&cfg, u32::MAX), all_coords(&cfg))
        } else {
            // Dense layer at ambient 2^16: all exponents to resolution 2^-7
            // on one coordinate plus a spread over every coordinate; the
            // indexed layer below covers the full 16384-point lattice.
            (all_exponents(&cfg, 7), all_coords(&cfg))
        };
        let mut items = Vec::new();
        if n_tot <= 3 {
            for j in &coords {
                for a in &exps {
                    items.push((*j, *a));
                }
            }
        } else {
            for a in &exps {
                items.push((coords[0], *a));
            }
            for j in &coords {
                for a in exps.iter().step_by(61) {
                    items.push((*j, *a));
                }
            }
        }
        let failures: Vec<String> = kernels::map_items(&items, |(j, a)| {
            let p = family.pow(*j, a).unwrap();
            if p.adjoint().compose(&p).unwrap() != ambient_id {
                return Some(format!("n_tot={n_tot} J={j} α={a}: adjoint∘pow != 1"));
            }
            if p.adjoint() != family.pow(*j, &a.neg()).unwrap() {
                return Some(format!("n_tot={n_tot} J={j} α={a}: adjoint != pow(-α)"));
            }
            None
        })
        .into_iter()
        .flatten()
        .collect();
        assert!(failures.is_empty(), "{:?}", &failures[..failures.len().min(3)]);
        powers_checked += items.len();

        // At n_tot = 4 additionally cover *every* lattice exponent through
        // the indexed rows: pow(-α)·pow(α) must read as the identity.
        if n_tot == 4 {
            let full = all_exponents(&cfg, u32::MAX);
            let j = coords[2];
            let rows: Vec<u64> = (0..64u64).map(|k| k * 1021 % cfg.ambient_len()).collect();
            let failures: Vec<String> = kernels::map_items(&full, |a| {
                use lbit::RowIndexed;
                let inv = family.pow_indexed(j, &a.neg());
                let fwd = family.pow_indexed(j, a);
                for &r in &rows {
                    let (mid, s1) = inv.row_at(r);
                    let (t, s2) = fwd.row_at(mid);
                    if t != r || (s1 * s2) != Sign::Plus {
                        return Some(format!("α={a} row {r}"));
                    }
                }
                None
            })
            .into_iter()
            .flatten()
            .collect();
            assert!(failures.is_empty(), "{:?}", &failures[..failures.len().min(3)]);
            powers_checked += full.len();
        }
    }

    let elapsed = t0.elapsed();
    assert!(
        elapsed.as_secs_f64() < 10.0,
        "criterion 1 took {elapsed:.2?}, budget 10 s"
    );
    pass(
        1,
        "operator algebra",
        format!(
            "members, triples and {powers_checked} fractional powers at n_tot = 2..4 in {elapsed:.2?}"
        ),
    );
}

#[test]
fn criterion_02_frequency_law() {
    let t0 = Instant::now();
    let mut count = 0usize;
    for n_tot in 2..=3u32 {
        let cfg = config(n_tot);
        let family = RootFamily::build(cfg);
        let base = CoSequence::all_plus("a", cfg.ambient_len() as usize).unwrap();
        let exps = all_exponents(&cfg, u32::MAX);
        let coords = all_coords(&cfg);
        let mut items = Vec::new();
        for j in &coords {
            for a in &exps {
                items.push((*j, *a));
            }
        }
        let failures: Vec<String> = kernels::map_items(&items, |(j, a)| {
            let out = family.pow(*j, a).unwrap().apply(&base).unwrap();
            let got = stats::frequency(&out).frequency;
            (got != a.plus_frequency())
                .then(|| format!("n_tot={n_tot} J={j} α={a}: {got} != {}", a.plus_frequency()))
        })
        .into_iter()
        .flatten()
        .collect();
        assert!(failures.is_empty(), "{:?}", &failures[..failures.len().min(3)]);
        count += items.len();
    }

    // The worked quarter-power example, counted over a 2^8-length
    // co-sequence: frequency exactly 7/8.
    let cfg = config(3);
    let family = RootFamily::build(cfg);
    let alpha = Q2Exponent::from_parts(1, 2, &cfg).unwrap();
    let out = family
        .pow(CircleCoord::new(1, &cfg).unwrap(), &alpha)
        .unwrap()
        .apply(&CoSequence::all_plus("a", 256).unwrap())
        .unwrap();
    let rep = stats::frequency(&out);
    assert_eq!(rep.frequency, big_ratio(7, 8));
    assert_eq!((rep.plus_count, rep.total), (224, 256));

    let elapsed = t0.elapsed();
    assert!(
        elapsed.as_secs_f64() < 5.0,
        "criterion 2 took {elapsed:.2?}, budget 5 s"
    );
    pass(
        2,
        "frequency law",
        format!("|1-α/2| exact on {count} (J, α) pairs; 7/8 at α = 1/4 reproduced in {elapsed:.2?}"),
    );
}

#[test]
fn criterion_03_exponent_additivity() {
    let mut exhaustive_pairs = 0usize;
    for n_tot in 2..=3u32 {
        let cfg = config(n_tot);
        let family = RootFamily::build(cfg);
        let res = cfg.max_resolution();
        let modulus = 4u64 << res;
        for j in all_coords(&cfg) {
            // Cache every power at the common finest resolution, then walk
            // all numerator pairs.
            let pows: Vec<SignedPermOp> = (0..modulus)
                .map(|num| {
                    family
                        .pow(j, &Q2Exponent::from_parts(num, res, &cfg).unwrap())
                        .unwrap()
                })
                .collect();
            let items: Vec<u64> = (0..modulus * modulus).collect();
            let failures: Vec<String> = kernels::map_items(&items, |k| {
                let a = (k / modulus) as usize;
                let b = (k % modulus) as usize;
                let lhs = pows[a].compose(&pows[b]).unwrap();
                let rhs = &pows[(a + b) % modulus as usize];
                (&lhs != rhs).then(|| format!("n_tot={n_tot} J={j} α={a}/{modulus} β={b}/{modulus}"))
            })
            .into_iter()
            .flatten()
            .collect();
            assert!(failures.is_empty(), "{:?}", &failures[..failures.len().min(3)]);
            exhaustive_pairs += items.len();
        }
    }

    // Sampled triples at n_tot = 4, exact equality still required.
    let cfg = config(4);
    let family = RootFamily::build(cfg);
    use rand::Rng;
    use rand_chacha::rand_core::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(20260809);
    let triples: Vec<(u32, u64, u64)> = (0..1024)
        .map(|_| {
            (
                rng.random_range(1..=cfg.circle_len()),
                rng.random_range(0..cfg.lattice_size()),
                rng.random_range(0..cfg.lattice_size()),
            )
        })
        .collect();
    let res = cfg.max_resolution();
    let failures: Vec<String> = kernels::map_items(&triples, |(j, na, nb)| {
        let j = CircleCoord::new(*j, &cfg).unwrap();
        let a = Q2Exponent::from_parts(*na, res, &cfg).unwrap();
        let b = Q2Exponent::from_parts(*nb, res, &cfg).unwrap();
        let lhs = family
            .pow(j, &a)
            .unwrap()
            .compose(&family.pow(j, &b).unwrap())
            .unwrap();
        let rhs = family.pow(j, &a.add(&b)).unwrap();
        (lhs != rhs).then(|| format!("J={j} α={a} β={b}"))
    })
    .into_iter()
    .flatten()
    .collect();
    assert!(failures.is_empty(), "{:?}", &failures[..failures.len().min(3)]);

    pass(
        3,
        "exponent additivity",
        format!(
            "exact on {exhaustive_pairs} exhaustive pairs (n_tot <= 3, every J) and 1024 sampled triples at n_tot = 4"
        ),
    );
}

#[test]
fn criterion_04_sequential_sg() {
    let args = experiments::sg::SgArgs {
        orientations: vec!["+x".into(), "+z".into()],
    };
    let report = experiments::sg::run(&args, 1, 11, 100_000).unwrap();

    // Grouping probabilities for the second device: {1/2, 0, 1/2, 1}.
    let device2: Vec<&str> = report
        .rows
        .iter()
        .filter(|r| r.section == "device 2 (+x)" && r.name.starts_with("P(b) grouping"))
        .map(|r| r.exact.as_deref().unwrap())
        .collect();
    assert_eq!(device2, vec!["1/2", "0", "1/2", "1"]);

    // Closed forms 1/4 and 3/8.
    let multinomial: Vec<&str> = report
        .rows
        .iter()
        .filter(|r| r.section == "multinomial")
        .map(|r| r.exact.as_deref().unwrap())
        .collect();
    assert_eq!(multinomial, vec!["1/4", "3/8"]);

    // Monte-Carlo events over 10^5 trajectories within 3σ.
    let mc: Vec<&String> = report
        .rows
        .iter()
        .filter(|r| r.section == "monte-carlo" || r.section == "trajectories")
        .filter_map(|r| r.note.as_ref())
        .collect();
    assert!(mc.len() >= 6);
    for note in mc {
        assert!(
            !note.contains("OUTSIDE"),
            "a sampled SG statistic fell outside 3σ: {note}"
        );
    }

    // The four canonical trajectory strings with their exact weights.
    let paths: Vec<(&str, &str)> = report
        .rows
        .iter()
        .filter(|r| r.section == "trajectories" && r.exact.is_some())
        .map(|r| (r.name.as_str(), r.exact.as_deref().unwrap()))
        .collect();
    assert_eq!(
        paths,
        vec![
            (".a a a", "1/2"),
            (".¬a b b", "1/4"),
            (".¬a ¬b c", "1/8"),
            (".¬a ¬b d", "1/8"),
        ]
    );

    pass(
        4,
        "sequential SG",
        "grouping quadruple {1/2, 0, 1/2, 1}, closed forms 1/4 and 3/8, 10^5 trajectories within 3σ",
    );
}

#[test]
fn criterion_05_epr_agreement() {
    // n_tot = 2: every shared-coordinate configuration there is.
    let cfg = config(2);
    let family = RootFamily::build(cfg);
    let exps = all_exponents(&cfg, u32::MAX);
    let mut items = Vec::new();
    for j in all_coords(&cfg) {
        for a3 in &exps {
            for a1 in &exps {
                for d in &exps {
                    items.push((j, *a3, *a1, *d));
                }
            }
        }
    }
    let total2 = items.len();
    let failures: Vec<String> = kernels::map_items(&items, |(j, a3, a1, d)| {
        let pair = entangled_pair(a1, &a1.add(d), a3, *j, *j, &family).unwrap();
        let got = stats::agreement(pair.state.cosequence(0), pair.state.cosequence(1))
            .unwrap()
            .agreement;
        (got != pair.predicted_agreement).then(|| {
            format!(
                "n_tot=2 J={j} α1={a1} δ={d} α3={a3}: counted {got} != |1-δ/2| = {}",
                pair.predicted_agreement
            )
        })
    })
    .into_iter()
    .flatten()
    .collect();
    assert!(
        failures.is_empty(),
        "EPR counterexample (must be reported): {:?}",
        &failures[..failures.len().min(3)]
    );

    // n_tot = 3: exhaustive over all (α₁, δ) pairs in two shared-coordinate
    // configurations.
    let cfg = config(3);
    let family = RootFamily::build(cfg);
    let exps = all_exponents(&cfg, u32::MAX);
    let links = [
        (
            CircleCoord::new(1, &cfg).unwrap(),
            Q2Exponent::from_parts(1, 5, &cfg).unwrap(),
        ),
        (
            CircleCoord::new(5, &cfg).unwrap(),
            Q2Exponent::zero(),
        ),
    ];
    let mut items = Vec::new();
    for (j, a3) in &links {
        for a1 in &exps {
            for d in &exps {
                items.push((*j, *a3, *a1, *d));
            }
        }
    }
    let total3 = items.len();
    let failures: Vec<String> = kernels::map_items(&items, |(j, a3, a1, d)| {
        let pair = entangled_pair(a1, &a1.add(d), a3, *j, *j, &family).unwrap();
        let got = stats::agreement(pair.state.cosequence(0), pair.state.cosequence(1))
            .unwrap()
            .agreement;
        (got != pair.predicted_agreement).then(|| {
            format!(
                "n_tot=3 J={j} α1={a1} δ={d} α3={a3}: counted {got} != |1-δ/2| = {}",
                pair.predicted_agreement
            )
        })
    })
    .into_iter()
    .flatten()
    .collect();
    assert!(
        failures.is_empty(),
        "EPR counterexample (must be reported): {:?}",
        &failures[..failures.len().min(3)]
    );

    // Sampled correlation within 3σ of cos θ over 10^5 draws.
    let delta = Q2Exponent::from_parts(1, 2, &cfg).unwrap(); // δ = 1/4
    let pair = entangled_pair(
        &Q2Exponent::from_parts(3, 1, &cfg).unwrap(),
        &Q2Exponent::from_parts(3, 1, &cfg).unwrap().add(&delta),
        &Q2Exponent::from_parts(5, 3, &cfg).unwrap(),
        CircleCoord::new(2, &cfg).unwrap(),
        CircleCoord::new(2, &cfg).unwrap(),
        &family,
    )
    .unwrap();
    assert_eq!(pair.predicted_correlation, big_ratio(3, 4)); // cos θ
    let sampled = stats::agreement_sampled(
        pair.state.cosequence(0),
        pair.state.cosequence(1),
        100_000,
        5,
    )
    .unwrap();
    assert!(
        stats::within_three_sigma(sampled.agree_count, 100_000, &pair.predicted_agreement),
        "sampled agreement {} of 100000 outside 3σ of 7/8",
        sampled.agree_count
    );

    pass(
        5,
        "EPR correlation",
        format!(
            "exact agreement on {total2} + {total3} shared-coordinate settings; sampled correlation within 3σ of cos θ"
        ),
    );
}

fn isqrt_u128(v: u128) -> u128 {
    if v == 0 {
        return 0;
    }
    let mut x = (v as f64).sqrt() as u128;
    while x > 0 && x * x > v {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= v {
        x += 1;
    }
    x
}

#[test]
fn criterion_06_bell_evasion() {
    let t0 = Instant::now();
    let cfg = config(4); // r_max = 12 accommodates every input

    // All on-lattice dyadic cosines with denominators <= 2^8.
    let mut values: Vec<(i64, u32)> = vec![(-1, 0), (0, 0), (1, 0)];
    for k in 1..=8u32 {
        let den = 1i64 << k;
        let mut p = 1i64;
        while p < den {
            values.push((p, k));
            values.push((-p, k));
            p += 2;
        }
    }
    assert_eq!(values.len(), 513);

    let mut defined = Vec::new();
    let mut undefined_surd = 0u64;
    let mut undefined_lattice = 0u64;
    for &(p1, k1) in &values {
        for &(p2, k2) in &values {
            let c1 = big_ratio(p1, 1i64 << k1);
            let c2 = big_ratio(p2, 1i64 << k2);
            let verdict = combine_cosines(&c1, &c2, CombineBranch::Difference, &cfg).unwrap();

            // Independent certificate in integer arithmetic:
            // (4^k1 - p1²)(4^k2 - p2²) must be a perfect square for the
            // surd to be rational.
            let s1 = (1i128 << (2 * k1)) - (p1 as i128) * (p1 as i128);
            let s2 = (1i128 << (2 * k2)) - (p2 as i128) * (p2 as i128);
            let surd_num = (s1 as u128) * (s2 as u128);
            let root = isqrt_u128(surd_num);
            let surd_is_square = root * root == surd_num;

            match verdict {
                Definedness::Defined(v) => {
                    assert!(surd_is_square, "({c1}, {c2}): Defined but surd not square");
                    // cos(θ-θ') = (p1·p2 + root) / 2^(k1+k2), reduced, must
                    // be dyadic within resolution 12 — recomputed here
                    // without the library's lattice test.
                    let num = (p1 as i128) * (p2 as i128) + root as i128;
                    let mut den_pow = k1 + k2;
                    let mut num = num;
                    while num != 0 && num % 2 == 0 && den_pow > 0 {
                        num /= 2;
                        den_pow -= 1;
                    }
                    assert!(den_pow <= 12, "({c1}, {c2}): Defined but off-lattice");
                    assert_eq!(v, big_ratio(num as i64, 1i64 << den_pow));
                    defined.push((c1.clone(), c2.clone()));
                }
                Definedness::Undefined(UndefinedReason::IrrationalSurd) => {
                    assert!(
                        !surd_is_square,
                        "({c1}, {c2}): IrrationalSurd verdict but surd is square"
                    );
                    undefined_surd += 1;
                }
                Definedness::Undefined(UndefinedReason::RationalButOffLattice) => {
                    assert!(surd_is_square);
                    undefined_lattice += 1;
                }
            }
        }
    }
    // Every diagonal pair is the degenerate Defined(1) case.
    for &(p, k) in &values {
        let c = big_ratio(p, 1i64 << k);
        assert!(defined.iter().any(|(a, b)| a == &c && b == &c));
    }

    // The harness refuses the Bell combination in every Undefined case:
    // spot-check through full bell runs.
    let mut refused = 0;
    let mut checked_defined = 0;
    for (i, &(p1, k1)) in values.iter().enumerate().step_by(37) {
        let (p2, k2) = values[(i * 7 + 13) % values.len()];
        let c1 = big_ratio(p1, 1i64 << k1);
        let c2 = big_ratio(p2, 1i64 << k2);
        let report = experiments::bell::run(
            &experiments::bell::BellArgs {
                cos_ab: c1.clone(),
                cos_ab_prime: c2.clone(),
                alpha1: big_ratio(0, 1),
                j: 1,
            },
            4,
            3,
            1000,
        )
        .unwrap();
        let third = report
            .rows
            .iter()
            .find(|r| r.name == "C(θ-θ')")
            .expect("third setting row");
        let combo = report
            .rows
            .iter()
            .find(|r| r.name.starts_with("|C(θ)-C(θ')|"))
            .expect("combination row");
        let verdict = combine_cosines(&c1, &c2, CombineBranch::Difference, &cfg).unwrap();
        match verdict {
            Definedness::Defined(_) => {
                assert!(third.exact.is_some());
                assert!(combo.exact.is_some());
                checked_defined += 1;
            }
            Definedness::Undefined(_) => {
                assert!(third.exact.is_none() && third.approx.is_none());
                assert!(third.note.as_deref().unwrap().contains("NOT EVALUABLE"));
                assert!(combo.exact.is_none() && combo.approx.is_none());
                assert!(combo.note.as_deref().unwrap().contains("NOT EVALUABLE"));
                refused += 1;
            }
        }
    }
    assert!(refused > 0, "spot-check never hit an Undefined pair");

    let elapsed = t0.elapsed();
    assert!(
        elapsed.as_secs_f64() < 30.0,
        "criterion 6 took {elapsed:.2?}, budget 30 s"
    );
    pass(
        6,
        "Bell evasion",
        format!(
            "513² pairs: {} Defined (certified), {undefined_surd} irrational-surd, {undefined_lattice} off-lattice; {refused} refusals and {checked_defined} evaluable runs spot-checked in {elapsed:.2?}",
            defined.len()
        ),
    );
}

#[test]
fn criterion_07_niven_oracle() {
    let f = numeric::scale();
    let pi = numeric::pi_fixed();
    let mut count = 0usize;
    let mut rational_set = std::collections::BTreeSet::new();
    for n in 1..=100i64 {
        for m in 0..(2 * n) {
            if num_integer::gcd(m, n) != 1 && !(m == 0 && n == 1) {
                continue;
            }
            count += 1;
            let angle = RationalAngle::new(m, n).unwrap();
            let closed = niven_classify(&angle);
            let value = numeric::cos_of_angle(m, n, &pi, &f);
            let numeric_verdict = numeric::numeric_rational_verdict(&value, &f);
            match (&closed, numeric_verdict) {
                (CosineClass::Rational(v), Some((p, q))) => {
                    assert_eq!(v, &big_ratio(p, q), "θ={m}π/{n}");
                    rational_set.insert(v.to_string());
                }
                (CosineClass::Irrational, None) => {}
                other => panic!("θ={m}π/{n}: closed-form and 60-digit numeric disagree: {other:?}"),
            }
        }
    }
    let expect: std::collections::BTreeSet<String> = ["-1", "-1/2", "0", "1/2", "1"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    assert_eq!(rational_set, expect);
    pass(
        7,
        "rational-cosine oracle",
        format!("{count} reduced angles with denominator <= 100 match the 60-digit numeric oracle; rational values exactly {{0, ±1/2, ±1}}"),
    );
}

#[test]
fn criterion_08_pythagorean_parity() {
    let mut count = 0usize;
    for k in 1..=12u32 {
        let den = 1i64 << k;
        let mut p = 1i64;
        while p < den {
            for s in [1i64, -1] {
                let c = big_ratio(s * p, den);
                assert_eq!(
                    sine_partner(&c).unwrap(),
                    CosineClass::Irrational,
                    "c = {c} should have no rational sine partner"
                );
                count += 1;
            }
            p += 2;
        }
    }
    assert_eq!(
        sine_partner(&big_ratio(3, 5)).unwrap(),
        CosineClass::Rational(big_ratio(4, 5))
    );
    pass(
        8,
        "Pythagorean parity",
        format!("{count} dyadic cosines (denominators to 2^12) all lack rational sines; 3/5 -> 4/5"),
    );
}

#[test]
fn criterion_09_dispersion_bound() {
    let cfg = config(3);
    let exps = all_exponents(&cfg, u32::MAX);
    let quarter_sq = big_ratio(1, 16);
    let mut boundary = Vec::new();
    for a in &exps {
        for b in &exps {
            let p1 = a.plus_frequency();
            let p2 = b.plus_frequency();
            let v = (&p1 * (BigRational::one() - &p1)) * (&p2 * (BigRational::one() - &p2));
            assert!(v <= quarter_sq, "α={a} β={b}: product exceeds (1/4)²");
            if v == quarter_sq {
                assert_eq!((p1.clone(), p2.clone()), (big_ratio(1, 2), big_ratio(1, 2)));
                boundary.push((*a, *b));
            }
        }
    }
    // Exactly the pairs with both exponents in {1, 3}.
    assert_eq!(boundary.len(), 4);

    // Cross-check on materialized co-sequences for a spread of exponents.
    let family = RootFamily::build(cfg);
    let j = CircleCoord::new(3, &cfg).unwrap();
    let base = CoSequence::all_plus("a", cfg.ambient_len() as usize).unwrap();
    for (ka, kb) in [(0usize, 32), (5, 64), (32, 96), (17, 99)] {
        let s1 = family.pow(j, &exps[ka]).unwrap().apply(&base).unwrap();
        let s2 = family.pow(j, &exps[kb]).unwrap().apply(&base).unwrap();
        let rep = stats::dispersion(&s1, &s2);
        assert!(rep.within_quarter_bound());
        let p1 = exps[ka].plus_frequency();
        let p2 = exps[kb].plus_frequency();
        let expect = (&p1 * (BigRational::one() - &p1)) * (&p2 * (BigRational::one() - &p2));
        assert_eq!(rep.product_squared, expect);
    }

    pass(
        9,
        "dispersion bound",
        format!(
            "Δ₁Δ₂ <= 1/4 over {} exponent pairs; equality exactly at the 4 pairs with both frequencies 1/2",
            exps.len() * exps.len()
        ),
    );
}

#[test]
fn criterion_10_celestial_roundtrip() {
    // Exhaustive at n_tot = 2: all 16 × 4 = 64 lattice points.
    let cfg = config(2);
    let mut count = 0;
    for num in 0..cfg.lattice_size() {
        let alpha = Q2Exponent::from_parts(num, cfg.max_resolution(), &cfg).unwrap();
        for j in all_coords(&cfg) {
            let d = celestial::direction_from_lbit(&alpha, j, &cfg);
            assert_eq!(celestial::alpha_from_direction(&d, &cfg).unwrap(), alpha);
            assert_eq!(celestial::coordinate_from_phi(d.phi(), &cfg).unwrap(), j);
            count += 1;
        }
    }
    assert_eq!(count, 64);

    // 10^4 sampled points at n_tot = 4.
    let cfg = config(4);
    use rand::Rng;
    use rand_chacha::rand_core::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
    for _ in 0..10_000 {
        let alpha = Q2Exponent::from_parts(
            rng.random_range(0..cfg.lattice_size()),
            cfg.max_resolution(),
            &cfg,
        )
        .unwrap();
        let j = CircleCoord::new(rng.random_range(1..=cfg.circle_len()), &cfg).unwrap();
        let d = celestial::direction_from_lbit(&alpha, j, &cfg);
        assert_eq!(celestial::alpha_from_direction(&d, &cfg).unwrap(), alpha);
        assert_eq!(celestial::coordinate_from_phi(d.phi(), &cfg).unwrap(), j);
    }

    pass(
        10,
        "celestial round-trip",
        "identity on all 64 lattice points at n_tot = 2 and 10^4 sampled points at n_tot = 4",
    );
}

#[test]
fn criterion_11_determinism() {
    let bin = env!("CARGO_BIN_EXE_lbit");
    let runs = [
        vec![
            "bell",
            "--cos-ab",
            "1/2",
            "--cos-ab-prime",
            "1/4",
            "--n-tot",
            "4",
            "--seed",
            "7",
            "--samples",
            "5000",
            "--format",
            "records",
        ],
        vec![
            "sg-chain",
            "--orientations",
            "+x,+z",
            "--seed",
            "3",
            "--samples",
            "20000",
            "--format",
            "records",
        ],
        vec![
            "ghz",
            "--alphas",
            "1/4,3/2,1/2,0,5/8,7/4,1",
            "--j-shared",
            "2",
            "--j-last",
            "2",
            "--seed",
            "9",
            "--samples",
            "10000",
            "--format",
            "records",
        ],
    ];
    for argv in &runs {
        let out1 = Command::new(bin).args(argv).output().unwrap();
        let out2 = Command::new(bin).args(argv).output().unwrap();
        assert!(out1.status.success(), "{argv:?}: {out1:?}");
        assert_eq!(
            out1.stdout, out2.stdout,
            "{argv:?}: two identical runs differ byte-wise"
        );
        assert!(!out1.stdout.is_empty());
    }

    // --out writes exactly the bytes stdout would carry.
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.records");
    let argv = &runs[0];
    let stdout_run = Command::new(bin).args(argv).output().unwrap();
    let file_run = Command::new(bin)
        .args(argv)
        .arg("--out")
        .arg(&path)
        .output()
        .unwrap();
    assert!(file_run.status.success());
    assert_eq!(std::fs::read(&path).unwrap(), stdout_run.stdout);

    pass(
        11,
        "determinism",
        "three experiments re-run byte-identically; --out matches stdout bytes",
    );
}
