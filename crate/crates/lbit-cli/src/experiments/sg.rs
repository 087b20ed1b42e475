//! Sequential Stern-Gerlach chains in the toy universe: iterate labellings
//! from powers of the replicated 2x2 imaginary unit, per-grouping detection
//! probabilities, closed-form multinomial draws and sampled trajectories
//! with radix-shift time evolution.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use lbit::stats::within_three_sigma;
use lbit::{CoSequence, Error, Result, Sign, SignedPermOp};

use crate::report::Report;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    X,
    Z,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Orientation {
    pub axis: Axis,
    pub positive: bool,
}

impl Orientation {
    pub fn parse(token: &str) -> Result<Orientation> {
        match token {
            "+x" => Ok(Orientation { axis: Axis::X, positive: true }),
            "-x" => Ok(Orientation { axis: Axis::X, positive: false }),
            "+z" => Ok(Orientation { axis: Axis::Z, positive: true }),
            "-z" => Ok(Orientation { axis: Axis::Z, positive: false }),
            _ => Err(Error::BadOrientation {
                token: token.to_string(),
            }),
        }
    }

    pub fn token(&self) -> &'static str {
        match (self.axis, self.positive) {
            (Axis::X, true) => "+x",
            (Axis::X, false) => "-x",
            (Axis::Z, true) => "+z",
            (Axis::Z, false) => "-z",
        }
    }
}

/// Grouping selected by an orientation relative to the previous device:
/// same direction -> 2 (never detected), opposite -> 4 (always), orthogonal
/// -> 1 or 3 by sign (half-half). Grouping g is labelled by the g-th power
/// of the replicated imaginary unit.
pub fn grouping_for(o: Orientation, prev: Orientation) -> usize {
    if o.axis == prev.axis {
        if o.positive == prev.positive {
            2
        } else {
            4
        }
    } else if o.positive {
        1
    } else {
        3
    }
}

fn grouping_probability(g: usize) -> BigRational {
    match g {
        1 | 3 => BigRational::new(BigInt::from(1), BigInt::from(2)),
        2 => BigRational::zero(),
        4 => BigRational::one(),
        _ => unreachable!("groupings are 1..=4"),
    }
}

/// The four grouping co-sequences `ī^g |x)` at ambient length `2^(2^n_tot)`.
fn groupings(len: usize, letter: &str) -> Result<[CoSequence; 4]> {
    let ibar = SignedPermOp::imaginary_unit().bar_replicate(len)?;
    let base = CoSequence::all_plus(letter, len)?;
    let mut acc = SignedPermOp::identity(len);
    let mut out = Vec::with_capacity(4);
    for _ in 0..4 {
        acc = ibar.compose(&acc)?;
        out.push(acc.apply(&base)?);
    }
    Ok(out.try_into().expect("four groupings"))
}

/// Device-specific symbol rendering: the third device labels its outputs
/// with two fresh letters rather than a negation.
fn symbol(device: usize, sign: Sign) -> String {
    match (device, sign) {
        (0, Sign::Plus) => "a".into(),
        (0, Sign::Minus) => "¬a".into(),
        (1, Sign::Plus) => "b".into(),
        (1, Sign::Minus) => "¬b".into(),
        (2, Sign::Plus) => "c".into(),
        (2, Sign::Minus) => "d".into(),
        _ => unreachable!("chain length <= 3"),
    }
}

fn device_letter(device: usize) -> &'static str {
    ["a", "b", "c"][device]
}

/// Exact binomial point probability `C(n, k) p^k (1-p)^(n-k)`.
fn binomial_point(n: u64, k: u64, p: &BigRational) -> BigRational {
    let mut choose = BigRational::one();
    for i in 0..k {
        choose = choose * BigRational::from_integer(BigInt::from(n - i))
            / BigRational::from_integer(BigInt::from(i + 1));
    }
    let q = BigRational::one() - p;
    let mut out = choose;
    for _ in 0..k {
        out *= p;
    }
    for _ in 0..(n - k) {
        out *= &q;
    }
    out
}

struct Device {
    orientation: Orientation,
    grouping: usize,
    cosequences: [CoSequence; 4],
}

pub struct SgArgs {
    pub orientations: Vec<String>,
}

pub fn run(args: &SgArgs, n_tot: u32, seed: u64, samples: u64) -> Result<Report> {
    if !(1..=2).contains(&n_tot) {
        return Err(Error::Unsupported(format!(
            "sg-chain runs in the toy universe (n_tot = 1 or 2), got n_tot = {n_tot}"
        )));
    }
    if args.orientations.is_empty() || args.orientations.len() > 2 {
        return Err(Error::Unsupported(format!(
            "sg-chain takes 1 or 2 orientations for the second and third devices, got {}",
            args.orientations.len()
        )));
    }
    let len = 1usize << (1usize << n_tot);

    // Device 1 is fixed along +z; its beam samples a half-half grouping
    // (grouping 1 by convention). Later devices select their grouping
    // relative to the previous device's orientation.
    let mut devices = vec![Device {
        orientation: Orientation::parse("+z")?,
        grouping: 1,
        cosequences: groupings(len, device_letter(0))?,
    }];
    for (k, token) in args.orientations.iter().enumerate() {
        let orientation = Orientation::parse(token)?;
        let grouping = grouping_for(orientation, devices[k].orientation);
        devices.push(Device {
            orientation,
            grouping,
            cosequences: groupings(len, device_letter(k + 1))?,
        });
    }

    let mut report = Report::new("sg-chain", n_tot, seed, samples);
    report.param("orientations", args.orientations.join(","));
    report.param("ambient_len", len);

    for (d, dev) in devices.iter().enumerate() {
        let section = format!("device {} ({})", d + 1, dev.orientation.token());
        for g in 1..=4 {
            let seq = &dev.cosequences[g - 1];
            let labelling: Vec<String> = seq
                .signs()
                .iter()
                .take(8)
                .map(|&s| symbol(d, s))
                .collect();
            let marker = if g == dev.grouping { "  <- selected" } else { "" };
            report.exact_noted(
                &section,
                &format!("P({}) grouping {g}", device_letter(d)),
                &grouping_probability(g),
                &format!(
                    "labelling {}{}{}",
                    labelling.join(" "),
                    if seq.len() > 8 { " …" } else { "" },
                    marker
                ),
            );
        }
        let p = grouping_probability(dev.grouping);
        report.exact_noted(
            &section,
            "P(detect at this device)",
            &p,
            &format!("grouping {} of the iterate labelling", dev.grouping),
        );
    }

    // Closed-form multinomial draws from the half-half groupings: one `a`
    // and three `¬a` among four draws, and one `b` with two `¬b` among
    // three.
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    let one_a = binomial_point(4, 1, &half);
    report.exact_noted(
        "multinomial",
        "P(one a, three ¬a | 4 draws, grouping 1)",
        &one_a,
        "closed form",
    );
    let one_b = binomial_point(3, 1, &half);
    if devices.len() >= 2 {
        report.exact_noted(
            "multinomial",
            "P(one b, two ¬b | 3 draws, grouping 1)",
            &one_b,
            "closed form",
        );
    }

    // Monte-Carlo: event frequencies and sampled trajectories.
    let draw = |rng: &mut ChaCha8Rng, seq: &CoSequence| -> Sign {
        let r = rng.random_range(0..seq.len() as u64);
        seq.sign(r as usize)
    };

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(1);
    let mut hits = 0u64;
    for _ in 0..samples {
        let plus = (0..4)
            .filter(|_| draw(&mut rng, &devices[0].cosequences[0]).is_plus())
            .count();
        if plus == 1 {
            hits += 1;
        }
    }
    let est = BigRational::new(BigInt::from(hits), BigInt::from(samples));
    report.sampled_noted(
        "monte-carlo",
        "freq(one a, three ¬a | 4 draws)",
        &est,
        samples,
        if within_three_sigma(hits, samples, &one_a) {
            "within 3σ of 1/4"
        } else {
            "OUTSIDE 3σ of 1/4"
        },
    );

    if devices.len() >= 2 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(2);
        let mut hits = 0u64;
        for _ in 0..samples {
            let plus = (0..3)
                .filter(|_| draw(&mut rng, &devices[1].cosequences[0]).is_plus())
                .count();
            if plus == 1 {
                hits += 1;
            }
        }
        let est = BigRational::new(BigInt::from(hits), BigInt::from(samples));
        report.sampled_noted(
            "monte-carlo",
            "freq(one b, two ¬b | 3 draws)",
            &est,
            samples,
            if within_three_sigma(hits, samples, &one_b) {
                "within 3σ of 3/8"
            } else {
                "OUTSIDE 3σ of 3/8"
            },
        );
    }

    // Trajectory statistics: walk the chain, absorbing on a plus draw;
    // absorbed trajectories repeat their final symbol.
    let chain_len = devices.len();
    let sample_trajectory = |rng: &mut ChaCha8Rng| -> Vec<(usize, Sign)> {
        let mut out = Vec::with_capacity(chain_len);
        for (d, dev) in devices.iter().enumerate() {
            let s = draw(rng, &dev.cosequences[dev.grouping - 1]);
            out.push((d, s));
            if s.is_plus() {
                break;
            }
        }
        out
    };
    let render_trajectory = |steps: &[(usize, Sign)]| -> String {
        let mut symbols: Vec<String> = steps.iter().map(|&(d, s)| symbol(d, s)).collect();
        while symbols.len() < chain_len {
            symbols.push(symbols.last().expect("nonempty").clone());
        }
        format!(".{}", symbols.join(" "))
    };

    // Exact distribution over trajectory strings.
    let mut exact: Vec<(String, BigRational)> = Vec::new();
    fn walk(
        devices: &[Device],
        d: usize,
        prefix: Vec<(usize, Sign)>,
        p: BigRational,
        out: &mut Vec<(Vec<(usize, Sign)>, BigRational)>,
    ) {
        let plus = grouping_probability(devices[d].grouping);
        let minus = BigRational::one() - &plus;
        if !plus.is_zero() {
            let mut hit = prefix.clone();
            hit.push((d, Sign::Plus));
            out.push((hit, &p * &plus));
        }
        if !minus.is_zero() {
            let mut miss = prefix;
            miss.push((d, Sign::Minus));
            if d + 1 < devices.len() {
                walk(devices, d + 1, miss, &p * &minus, out);
            } else {
                out.push((miss, &p * &minus));
            }
        }
    }
    let mut paths = Vec::new();
    walk(&devices, 0, Vec::new(), BigRational::one(), &mut paths);
    for (steps, p) in &paths {
        exact.push((render_trajectory(steps), p.clone()));
    }
    exact.sort_by(|a, b| a.0.cmp(&b.0));

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(3);
    let mut counts: Vec<(String, u64)> = exact.iter().map(|(s, _)| (s.clone(), 0)).collect();
    let mut first = None;
    for t in 0..samples {
        let steps = sample_trajectory(&mut rng);
        let s = render_trajectory(&steps);
        if t == 0 {
            first = Some(steps);
        }
        if let Some(slot) = counts.iter_mut().find(|(k, _)| *k == s) {
            slot.1 += 1;
        }
    }

    for ((name, p), (_, count)) in exact.iter().zip(&counts) {
        report.exact_noted("trajectories", name, p, "exact path probability");
        let est = BigRational::new(BigInt::from(*count), BigInt::from(samples));
        report.sampled_noted(
            "trajectories",
            &format!("{name} sampled"),
            &est,
            samples,
            if within_three_sigma(*count, samples, p) {
                "within 3σ"
            } else {
                "OUTSIDE 3σ"
            },
        );
    }

    // Radix-shift time evolution of the first sampled trajectory: the radix
    // point moves right and the symbol behind it is erased.
    if let Some(steps) = first {
        let mut symbols: Vec<String> = steps.iter().map(|&(d, s)| symbol(d, s)).collect();
        while symbols.len() < chain_len {
            symbols.push(symbols.last().expect("nonempty").clone());
        }
        for t in 0..symbols.len() {
            report.note(
                "time evolution",
                &format!("t{t}"),
                format!(".{}", symbols[t..].join(" ")),
            );
        }
    }

    Ok(report)
}
