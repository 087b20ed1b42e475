//! Machine-checkable invariant suites over every module, with witnesses on
//! failure. The CLI `verify` subcommand renders these outcomes; the
//! acceptance tests run the same functions at pinned sizes.

use num_rational::BigRational;
use num_traits::One;

use crate::celestial;
use crate::config::AmbientConfig;
use crate::error::Result;
use crate::exponent::{CircleCoord, Q2Exponent};
use crate::family::RootFamily;
use crate::kernels;
use crate::lbit::{self, GhzParams};
use crate::rational::{
    self, big_ratio, combine_cosines, is_q2_member, niven_classify, niven_classify_by_orbit,
    sine_partner, CombineBranch, CosineClass, Definedness,
};
use crate::signperm::{CoSequence, SignedPermOp};
use crate::stats;

#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub witness: Option<String>,
}

impl CheckOutcome {
    fn pass(name: &str, detail: String) -> Self {
        CheckOutcome {
            name: name.to_string(),
            passed: true,
            detail,
            witness: None,
        }
    }

    fn fail(name: &str, detail: String, witness: String) -> Self {
        CheckOutcome {
            name: name.to_string(),
            passed: false,
            detail,
            witness: Some(witness),
        }
    }

    fn from_witnesses(name: &str, detail: String, mut witnesses: Vec<String>) -> Self {
        if witnesses.is_empty() {
            CheckOutcome::pass(name, detail)
        } else {
            let shown = witnesses.drain(..witnesses.len().min(3)).collect::<Vec<_>>();
            CheckOutcome::fail(name, detail, shown.join("; "))
        }
    }
}

fn all_exponents(config: &AmbientConfig, cap_resolution: u32) -> Vec<Q2Exponent> {
    let res = config.max_resolution().min(cap_resolution);
    (0..(4u64 << res))
        .map(|num| Q2Exponent::from_parts(num, res, config).expect("on lattice"))
        .collect()
}

fn all_coordinates(config: &AmbientConfig) -> Vec<CircleCoord> {
    (1..=config.circle_len())
        .map(|j| CircleCoord::new(j, config).expect("in range"))
        .collect()
}

/// Deterministic low-discrepancy index walker for subsampling big sweeps.
fn strided(count: u64, take: u64) -> Vec<u64> {
    if take >= count {
        return (0..count).collect();
    }
    let step = (count / take).max(1);
    (0..take).map(|k| (k * step + k % step.max(1)) % count).collect()
}

pub fn square_roots(family: &RootFamily) -> CheckOutcome {
    let dim = family.config().operator_dim();
    let minus_one = SignedPermOp::identity(dim).negate();
    let mut witnesses = Vec::new();
    for j in 1..=family.len() as u32 {
        let e = family.member(j).expect("in range");
        if e.compose(e).expect("same dim") != minus_one {
            witnesses.push(format!("E_{j}^2 != -1"));
        }
    }
    CheckOutcome::from_witnesses(
        "square_roots",
        format!("{} members of dim {} square to -1", family.len(), dim),
        witnesses,
    )
}

pub fn sign_balance(family: &RootFamily) -> CheckOutcome {
    let dim = family.config().operator_dim();
    let mut witnesses = Vec::new();
    for j in 1..=family.len() as u32 {
        let e = family.member(j).expect("in range");
        if e.plus_sign_count() != dim / 2 {
            witnesses.push(format!("E_{j} has {} plus signs", e.plus_sign_count()));
        }
    }
    CheckOutcome::from_witnesses(
        "sign_balance",
        format!("every member carries exactly {} plus signs", dim / 2),
        witnesses,
    )
}

pub fn quaternion_triples(family: &RootFamily) -> CheckOutcome {
    let m = family.config().circle_m();
    let mut witnesses = Vec::new();
    for j in 1..=m {
        match family.quaternion_triple(j) {
            Ok(rep) if rep.holds() => {}
            Ok(rep) => {
                for v in rep.failures.iter().take(2) {
                    witnesses.push(format!(
                        "triple j={j}: {} fails at row {} (got {}, want {})",
                        v.relation, v.row, v.got, v.want
                    ));
                }
            }
            Err(e) => witnesses.push(format!("triple j={j}: {e}")),
        }
    }
    CheckOutcome::from_witnesses(
        "quaternion_triples",
        format!("{m} triples obey the cyclic multiplication rules"),
        witnesses,
    )
}

pub fn circle_premultiplication(family: &RootFamily) -> CheckOutcome {
    let config = family.config();
    let e_last = family
        .member(2 * config.circle_m() + 1)
        .expect("singleton member");
    let mut witnesses = Vec::new();
    for j in all_coordinates(config) {
        let stepped = e_last
            .compose(&family.cycle_coordinate(j))
            .expect("same dim");
        if stepped != family.cycle_coordinate(j.advance(1, config)) {
            witnesses.push(format!("J={j}: E_last∘op(J) != op(J+M)"));
        }
    }
    CheckOutcome::from_witnesses(
        "circle_premultiplication",
        format!(
            "pre-multiplication by E_{} walks J -> J+M over all {} coordinates",
            2 * config.circle_m() + 1,
            config.circle_len()
        ),
        witnesses,
    )
}

/// `adjoint(P)∘P == 1` and `adjoint(P) == pow(-α)` for fractional powers.
pub fn adjoint_inverse(family: &RootFamily, cap_resolution: u32, coord_take: u64) -> CheckOutcome {
    let config = family.config();
    let exps = all_exponents(config, cap_resolution);
    let coords = all_coordinates(config);
    let picked: Vec<CircleCoord> = strided(coords.len() as u64, coord_take)
        .into_iter()
        .map(|k| coords[k as usize])
        .collect();

    let mut items = Vec::new();
    for j in &picked {
        for a in &exps {
            items.push((*j, *a));
        }
    }
    let id = SignedPermOp::identity(config.ambient_len() as usize);
    let witnesses: Vec<String> = kernels::map_items(&items, |(j, a)| {
        let p = family.pow(*j, a).expect("dense config");
        if p.adjoint().compose(&p).expect("same dim") != id {
            return Some(format!("J={j} α={a}: adjoint∘pow != 1"));
        }
        if p.adjoint() != family.pow(*j, &a.neg()).expect("dense config") {
            return Some(format!("J={j} α={a}: adjoint != pow(-α)"));
        }
        None
    })
    .into_iter()
    .flatten()
    .collect();

    CheckOutcome::from_witnesses(
        "adjoint_inverse",
        format!(
            "adjoint is a two-sided inverse and equals pow(-α) on {} powers ({} coords x {} exponents)",
            items.len(),
            picked.len(),
            exps.len()
        ),
        witnesses,
    )
}

pub fn frequency_law(family: &RootFamily, cap_resolution: u32, coord_take: u64) -> CheckOutcome {
    let config = family.config();
    let exps = all_exponents(config, cap_resolution);
    let coords = all_coordinates(config);
    let picked: Vec<CircleCoord> = strided(coords.len() as u64, coord_take)
        .into_iter()
        .map(|k| coords[k as usize])
        .collect();
    let len = config.ambient_len() as usize;
    let base = CoSequence::all_plus("a", len).expect("power of two");

    let mut items = Vec::new();
    for j in &picked {
        for a in &exps {
            items.push((*j, *a));
        }
    }
    let witnesses: Vec<String> = kernels::map_items(&items, |(j, a)| {
        let out = family
            .pow(*j, a)
            .expect("dense config")
            .apply(&base)
            .expect("same dim");
        let got = stats::frequency(&out).frequency;
        let want = a.plus_frequency();
        (got != want).then(|| format!("J={j} α={a}: frequency {got} != |1-α/2| = {want}"))
    })
    .into_iter()
    .flatten()
    .collect();

    CheckOutcome::from_witnesses(
        "frequency_law",
        format!(
            "plus frequency equals |1-α/2| on {} (J, α) pairs at ambient {}",
            items.len(),
            len
        ),
        witnesses,
    )
}

pub fn exponent_additivity(
    family: &RootFamily,
    cap_resolution: u32,
    pair_take: u64,
) -> CheckOutcome {
    let config = family.config();
    let exps = all_exponents(config, cap_resolution);
    let coords = all_coordinates(config);
    let n = exps.len() as u64;
    let total = n * n;
    let picked = strided(total, pair_take);
    let j = coords[coords.len() / 2];

    let items: Vec<(Q2Exponent, Q2Exponent)> = picked
        .into_iter()
        .map(|k| (exps[(k / n) as usize], exps[(k % n) as usize]))
        .collect();
    let witnesses: Vec<String> = kernels::map_items(&items, |(a, b)| {
        let lhs = family
            .pow(j, a)
            .expect("dense config")
            .compose(&family.pow(j, b).expect("dense config"))
            .expect("same dim");
        let rhs = family.pow(j, &a.add(b)).expect("dense config");
        (lhs != rhs).then(|| format!("J={j} α={a} β={b}: pow(α)∘pow(β) != pow(α+β)"))
    })
    .into_iter()
    .flatten()
    .collect();

    CheckOutcome::from_witnesses(
        "exponent_additivity",
        format!(
            "pow(α)∘pow(β) == pow(α+β mod 4) on {} exponent pairs at J={j}",
            items.len()
        ),
        witnesses,
    )
}

/// Hermitian under the i-convention exactly at odd integer exponents.
pub fn hermiticity(family: &RootFamily, cap_resolution: u32) -> CheckOutcome {
    let config = family.config();
    let exps = all_exponents(config, cap_resolution.min(3));
    let j = CircleCoord::new(1, config).expect("J=1");
    let witnesses: Vec<String> = kernels::map_items(&exps, |a| {
        let p = family.pow(j, a).expect("dense config");
        let want = a.is_odd_integer();
        let got = p.is_hermitian();
        (got != want).then(|| {
            format!("α={a}: is_hermitian = {got}, odd-integer rule says {want}")
        })
    })
    .into_iter()
    .flatten()
    .collect();
    CheckOutcome::from_witnesses(
        "hermiticity",
        format!(
            "(i∘P)* == i∘P exactly at odd integer α, over {} exponents",
            exps.len()
        ),
        witnesses,
    )
}

/// Exact elementwise agreement of shared-coordinate pairs equals
/// `|1 - δ/2|` for every swept `(α₁, δ)`.
///
/// The sweep stays inside the domain where the prediction is a theorem: the
/// pair-linking factor either shares the coordinate (`j3 == j1`, any `α₃`)
/// or is scalar (`α₃ ∈ {0, 2}`, any `j3`). The behavior outside that domain
/// is pinned separately by `mixed_link_deviation`.
pub fn epr_agreement(
    family: &RootFamily,
    cap_resolution: u32,
    pair_take: u64,
    links: &[(u32, u32, Q2Exponent)],
) -> CheckOutcome {
    let config = family.config();
    let exps = all_exponents(config, cap_resolution);
    let n = exps.len() as u64;
    let picked = strided(n * n, pair_take);

    let mut items = Vec::new();
    for k in picked {
        let a1 = exps[(k / n) as usize];
        let delta = exps[(k % n) as usize];
        for &(j1, j3, a3) in links {
            debug_assert!(j1 == j3 || a3.is_scalar());
            items.push((a1, delta, a3, j1, j3));
        }
    }
    let witnesses: Vec<String> = kernels::map_items(&items, |(a1, delta, a3, j1, j3)| {
        let j1 = CircleCoord::new(*j1, config).expect("in range");
        let j3 = CircleCoord::new(*j3, config).expect("in range");
        let a2 = a1.add(delta);
        let pair = lbit::entangled_pair(a1, &a2, a3, j1, j3, family).expect("dense config");
        let got = stats::agreement(pair.state.cosequence(0), pair.state.cosequence(1))
            .expect("same length")
            .agreement;
        (got != pair.predicted_agreement).then(|| {
            format!(
                "J1={j1} J3={j3} α1={a1} δ={delta} α3={a3}: agreement {got} != {}",
                pair.predicted_agreement
            )
        })
    })
    .into_iter()
    .flatten()
    .collect();

    CheckOutcome::from_witnesses(
        "epr_agreement",
        format!(
            "pair agreement equals |1-δ/2| on {} parameter settings",
            items.len()
        ),
        witnesses,
    )
}

/// Documented deviation: with a fractional linking exponent on a different
/// coordinate, the exact count is authoritative and the `|1 - δ/2|`
/// shortcut can fail. This check confirms the deviation exists (so reports
/// keep quoting counted values) and that the count is still reproducible.
pub fn mixed_link_deviation(family: &RootFamily) -> CheckOutcome {
    let config = family.config();
    let j1 = CircleCoord::new(1, config).expect("J=1");
    let j3 = CircleCoord::new(config.circle_m() + 1, config).expect("in range");
    let half = Q2Exponent::from_parts(1, 1, config).expect("on lattice");
    let pair = lbit::entangled_pair(&Q2Exponent::zero(), &half, &half, j1, j3, family)
        .expect("dense config");
    let counted = stats::agreement(pair.state.cosequence(0), pair.state.cosequence(1))
        .expect("same length")
        .agreement;
    let again = stats::agreement(pair.state.cosequence(0), pair.state.cosequence(1))
        .expect("same length")
        .agreement;
    if counted != again {
        return CheckOutcome::fail(
            "mixed_link_deviation",
            "exact counts reproducible".into(),
            "two identical counts differ".into(),
        );
    }
    let detail = format!(
        "J1={j1} J3={j3} α3=1/2 δ=1/2: counted agreement {counted} vs naive prediction {} — the exact count is authoritative outside the shared-coordinate domain",
        pair.predicted_agreement
    );
    if counted == pair.predicted_agreement {
        CheckOutcome::pass(
            "mixed_link_deviation",
            format!("{detail} (no deviation at this config)"),
        )
    } else {
        CheckOutcome::pass("mixed_link_deviation", detail)
    }
}

/// Marginal frequency of each label in an entangled pair ignores the
/// partner's parameters.
pub fn epr_marginals(family: &RootFamily, cap_resolution: u32, take: u64) -> CheckOutcome {
    let config = family.config();
    let exps = all_exponents(config, cap_resolution);
    let n = exps.len() as u64;
    let picked = strided(n * n, take);
    let j1 = CircleCoord::new(1, config).expect("J=1");
    let j3 = CircleCoord::new(config.circle_m() + 1, config).expect("in range");

    let items: Vec<(Q2Exponent, Q2Exponent)> = picked
        .into_iter()
        .map(|k| (exps[(k / n) as usize], exps[(k % n) as usize]))
        .collect();
    let witnesses: Vec<String> = kernels::map_items(&items, |(a1, a2)| {
        let pair =
            lbit::entangled_pair(a1, a2, &Q2Exponent::zero(), j1, j3, family).expect("dense");
        for (row, alpha) in [(0usize, a1), (1, a2)] {
            let got = stats::frequency(pair.state.cosequence(row)).frequency;
            // The row's total exponent along J1 is α_row; α3 = 0 here, so
            // the marginal must be |1 - α_row/2| regardless of the partner.
            if got != alpha.plus_frequency() {
                return Some(format!(
                    "α1={a1} α2={a2} row {row}: marginal {got} != {}",
                    alpha.plus_frequency()
                ));
            }
        }
        None
    })
    .into_iter()
    .flatten()
    .collect();

    CheckOutcome::from_witnesses(
        "epr_marginals",
        format!("row marginals ignore the partner on {} settings", items.len()),
        witnesses,
    )
}

pub fn ghz_consistency(family: &RootFamily, take: u64) -> CheckOutcome {
    let config = family.config();
    let exps = all_exponents(config, config.max_resolution().min(3));
    let n = exps.len() as u64;
    let picked = strided(n * n * n, take);
    let j_shared = CircleCoord::new(2.min(config.circle_len()), config).expect("in range");
    let j_last = CircleCoord::new(config.circle_len(), config).expect("in range");

    let items: Vec<GhzParams> = picked
        .into_iter()
        .map(|k| {
            let a = exps[(k % n) as usize];
            let b = exps[((k / n) % n) as usize];
            let c = exps[((k / (n * n)) % n) as usize];
            GhzParams {
                j_shared,
                j_last,
                alphas: [a, b, c, a.add(&b), b.add(&c), c.sub(&a), exps[(k % n) as usize]],
            }
        })
        .collect();

    let witnesses: Vec<String> = kernels::map_items(&items, |params| {
        let ghz = lbit::ghz_triple(params, family).expect("dense config");
        for row in 0..3 {
            let collapsed = lbit::ghz_collapsed_row(params, family, row).expect("dense");
            if ghz.state.cosequence(row).signs() != collapsed.signs() {
                return Some(format!(
                    "row {row}: full 3-lbit differs from pow(β)∘pow(α7) collapse"
                ));
            }
        }
        // Pairwise statistics must agree with the 2-lbit route for the same
        // parameters; the β-difference formula is additionally exact when
        // the last factor is scalar or shares the coordinate.
        let lawful = params.j_last == params.j_shared || params.alphas[6].is_scalar();
        for (x, y, bi, bj) in [
            (0usize, 1usize, 0usize, 1usize),
            (0, 2, 0, 2),
            (1, 2, 1, 2),
        ] {
            let got = stats::agreement(ghz.state.cosequence(x), ghz.state.cosequence(y))
                .expect("same length")
                .agreement;
            let pair = lbit::entangled_pair(
                &ghz.betas[bi],
                &ghz.betas[bj],
                &params.alphas[6],
                params.j_shared,
                params.j_last,
                family,
            )
            .expect("dense config");
            let two_route = stats::agreement(pair.state.cosequence(0), pair.state.cosequence(1))
                .expect("same length")
                .agreement;
            if got != two_route {
                return Some(format!(
                    "rows {x},{y}: 3-lbit agreement {got} != 2-lbit route {two_route}"
                ));
            }
            if lawful {
                let want = ghz.betas[bj].sub(&ghz.betas[bi]).plus_frequency();
                if got != want {
                    return Some(format!(
                        "rows {x},{y}: agreement {got} != |1-(β{bj}-β{bi})/2| = {want}"
                    ));
                }
            }
        }
        None
    })
    .into_iter()
    .flatten()
    .collect();

    CheckOutcome::from_witnesses(
        "ghz_consistency",
        format!(
            "3-lbit rows collapse to pow(β_i)∘pow(α7) and pair correlations track β differences on {} settings",
            items.len()
        ),
        witnesses,
    )
}

pub fn dispersion_bound(config: &AmbientConfig) -> CheckOutcome {
    let exps = all_exponents(config, config.max_resolution().min(6));
    let quarter_sq = big_ratio(1, 16);
    let mut witnesses = Vec::new();
    let mut boundary = 0usize;
    for a in &exps {
        for b in &exps {
            let p1 = a.plus_frequency();
            let p2 = b.plus_frequency();
            let v = (&p1 * (BigRational::one() - &p1)) * (&p2 * (BigRational::one() - &p2));
            if v > quarter_sq {
                witnesses.push(format!("α={a}, β={b}: Δ1Δ2 > 1/4"));
            } else if v == quarter_sq {
                boundary += 1;
                if p1 != big_ratio(1, 2) || p2 != big_ratio(1, 2) {
                    witnesses.push(format!("α={a}, β={b}: boundary away from (1/2, 1/2)"));
                }
            }
        }
    }
    CheckOutcome::from_witnesses(
        "dispersion_bound",
        format!(
            "Δ1Δ2 <= 1/4 over {} frequency pairs; equality exactly at frequency (1/2, 1/2) [{} boundary pairs]",
            exps.len() * exps.len(),
            boundary
        ),
        witnesses,
    )
}

pub fn celestial_roundtrip(config: &AmbientConfig, take: u64) -> CheckOutcome {
    let exps = all_exponents(config, config.max_resolution());
    let coords = all_coordinates(config);
    let total = (exps.len() * coords.len()) as u64;
    let picked = strided(total, take);
    let mut witnesses = Vec::new();
    for k in &picked {
        let alpha = exps[(*k as usize) / coords.len()];
        let j = coords[(*k as usize) % coords.len()];
        let d = celestial::direction_from_lbit(&alpha, j, config);
        match celestial::alpha_from_direction(&d, config) {
            Ok(back) if back == alpha => {}
            Ok(back) => witnesses.push(format!("α={alpha} J={j}: came back as α={back}")),
            Err(e) => witnesses.push(format!("α={alpha} J={j}: {e}")),
        }
        match celestial::coordinate_from_phi(d.phi(), config) {
            Ok(back) if back == j => {}
            Ok(back) => witnesses.push(format!("α={alpha} J={j}: came back as J={back}")),
            Err(e) => witnesses.push(format!("α={alpha} J={j}: {e}")),
        }
        if !is_q2_member(d.cos_theta(), config) {
            witnesses.push(format!("α={alpha} J={j}: cos θ off-lattice"));
        }
    }
    CheckOutcome::from_witnesses(
        "celestial_roundtrip",
        format!(
            "(α, J) -> (cos θ, φ) -> (α, J) is the identity on {} of {} lattice points",
            picked.len(),
            total
        ),
        witnesses,
    )
}

pub fn niven_consistency(max_den: i64) -> CheckOutcome {
    let mut witnesses = Vec::new();
    let mut rational_hits = 0usize;
    let mut count = 0usize;
    for n in 1..=max_den {
        for m in 0..(2 * n) {
            if num_integer::gcd(m, n) != 1 && !(m == 0 && n == 1) {
                continue;
            }
            let a = rational::RationalAngle::new(m, n).expect("den > 0");
            count += 1;
            let closed = niven_classify(&a);
            let orbit = niven_classify_by_orbit(&a);
            if closed != orbit {
                witnesses.push(format!("θ={m}π/{n}: closed-form and orbit disagree"));
            }
            if let CosineClass::Rational(v) = &closed {
                rational_hits += 1;
                let allowed = [
                    big_ratio(0, 1),
                    big_ratio(1, 2),
                    big_ratio(-1, 2),
                    big_ratio(1, 1),
                    big_ratio(-1, 1),
                ];
                if !allowed.contains(v) {
                    witnesses.push(format!("θ={m}π/{n}: rational cosine {v} outside value set"));
                }
            }
        }
    }
    CheckOutcome::from_witnesses(
        "niven_consistency",
        format!(
            "closed-form and doubling-orbit classifications agree on {count} reduced angles (denominators <= {max_den}); {rational_hits} rational cosines, all in {{0, ±1/2, ±1}}"
        ),
        witnesses,
    )
}

pub fn sine_partner_parity(max_k: u32) -> CheckOutcome {
    let mut witnesses = Vec::new();
    let mut count = 0usize;
    for k in 1..=max_k {
        let den = 1i64 << k;
        let mut p = 1i64;
        while p < den {
            for s in [1i64, -1] {
                let c = big_ratio(s * p, den);
                count += 1;
                if sine_partner(&c).expect("|c| <= 1") != CosineClass::Irrational {
                    witnesses.push(format!("c={c}: dyadic cosine with rational sine"));
                }
            }
            p += 2;
        }
    }
    match sine_partner(&big_ratio(3, 5)).expect("|c| <= 1") {
        CosineClass::Rational(v) if v == big_ratio(4, 5) => {}
        other => witnesses.push(format!("control 3/5 -> {other:?}, want 4/5")),
    }
    CheckOutcome::from_witnesses(
        "sine_partner_parity",
        format!(
            "no rational sine partner for {count} dyadic cosines (denominators up to 2^{max_k}); non-dyadic control 3/5 -> 4/5"
        ),
        witnesses,
    )
}

/// Enumerate dyadic cosine pairs and classify the combined (difference)
/// orientation. Returns the outcome plus the Defined set for reporting.
pub fn definability_enumeration(
    config: &AmbientConfig,
    max_k: u32,
) -> (CheckOutcome, Vec<(BigRational, BigRational, BigRational)>) {
    let mut values = vec![big_ratio(-1, 1), big_ratio(0, 1), big_ratio(1, 1)];
    for k in 1..=max_k {
        let den = 1i64 << k;
        let mut p = 1i64;
        while p < den {
            values.push(big_ratio(p, den));
            values.push(big_ratio(-p, den));
            p += 2;
        }
    }
    values.sort();
    let mut witnesses = Vec::new();
    let mut defined = Vec::new();
    let mut undefined_surd = 0u64;
    let mut undefined_lattice = 0u64;
    for c1 in &values {
        for c2 in &values {
            match combine_cosines(c1, c2, CombineBranch::Difference, config) {
                Ok(Definedness::Defined(v)) => {
                    // Independent certificate: the surd really is a rational
                    // square and the value really is on the lattice.
                    let one = BigRational::one();
                    let surd_sq = (&one - c1 * c1) * (&one - c2 * c2);
                    if rational::rational_sqrt_exact(&surd_sq).is_none() || !is_q2_member(&v, config)
                    {
                        witnesses.push(format!("({c1}, {c2}): bogus Defined({v})"));
                    }
                    defined.push((c1.clone(), c2.clone(), v));
                }
                Ok(Definedness::Undefined(rational::UndefinedReason::IrrationalSurd)) => {
                    undefined_surd += 1
                }
                Ok(Definedness::Undefined(rational::UndefinedReason::RationalButOffLattice)) => {
                    undefined_lattice += 1
                }
                Err(e) => witnesses.push(format!("({c1}, {c2}): {e}")),
            }
        }
    }
    let total = (values.len() * values.len()) as u64;
    let outcome = CheckOutcome::from_witnesses(
        "definability_enumeration",
        format!(
            "{total} dyadic cosine pairs (denominators <= 2^{max_k}): {} Defined, {undefined_surd} irrational-surd, {undefined_lattice} off-lattice",
            defined.len()
        ),
        witnesses,
    );
    (outcome, defined)
}

/// Not a pass/fail check: surfaces the constructive lattice count next to
/// the nominal `2^N` figure (they agree only at n_tot = 2).
pub fn lattice_cardinality_note(config: &AmbientConfig) -> CheckOutcome {
    let constructive = config.lattice_size();
    let nominal = 1u64 << config.operator_dim();
    CheckOutcome::pass(
        "lattice_cardinality",
        format!(
            "constructive exponent lattice has 4·2^{} = {constructive} points; the nominal 2^N count is {nominal} (equal only at n_tot = 2)",
            config.max_resolution()
        ),
    )
}

pub fn sampling_determinism(family: &RootFamily, samples: u64, seed: u64) -> CheckOutcome {
    let config = family.config();
    let j = CircleCoord::new(1, config).expect("J=1");
    let alpha = Q2Exponent::from_parts(1, config.max_resolution().min(2), config)
        .expect("on lattice");
    let base = CoSequence::all_plus("a", config.ambient_len() as usize).expect("power of two");
    let out = family
        .pow(j, &alpha)
        .expect("dense config")
        .apply(&base)
        .expect("same dim");
    let a = stats::frequency_sampled(&out, samples, seed);
    let b = stats::frequency_sampled(&out, samples, seed);
    if a != b {
        return CheckOutcome::fail(
            "sampling_determinism",
            "two identical sampled runs".into(),
            format!("counts differ: {} vs {}", a.plus_count, b.plus_count),
        );
    }
    if !stats::within_three_sigma(a.plus_count, samples, &alpha.plus_frequency()) {
        return CheckOutcome::fail(
            "sampling_determinism",
            format!("sampled frequency within 3σ of exact over {samples} draws"),
            format!(
                "plus count {} of {samples} vs exact {}",
                a.plus_count,
                alpha.plus_frequency()
            ),
        );
    }
    CheckOutcome::pass(
        "sampling_determinism",
        format!(
            "identical seeds reproduce identical counts; {samples} draws sit within 3σ of |1-α/2|"
        ),
    )
}

/// The full suite at sizes scaled to the config. `samples`/`seed` drive the
/// Monte-Carlo determinism check.
pub fn run_all(config: &AmbientConfig, samples: u64, seed: u64) -> Result<Vec<CheckOutcome>> {
    if !config.dense_ok() {
        return Err(crate::error::Error::Unsupported(format!(
            "verification sweeps need dense co-sequences (n_tot <= 4), got n_tot = {}",
            config.n_tot()
        )));
    }
    let family = RootFamily::build(*config);
    let exhaustive = config.n_tot() <= 3;
    let cap = if exhaustive {
        config.max_resolution()
    } else {
        6
    };
    let (pow_pairs, epr_take, ghz_take, roundtrip_take) = if exhaustive {
        (u64::MAX, 400, 80, u64::MAX)
    } else {
        (1500, 120, 20, 10_000)
    };
    let coord_take = if exhaustive { u64::MAX } else { 6 };

    let m = config.circle_m();
    let frac = Q2Exponent::from_parts(1, config.max_resolution().min(3), config)?;
    let links = [
        (1u32, 1u32, frac),
        (m + 1, m + 1, Q2Exponent::from_parts(3, 1, config)?),
        (1, m + 1, Q2Exponent::zero()),
        (m.min(2), config.circle_len(), Q2Exponent::from_integer(2, config)),
    ];

    let mut out = vec![
        square_roots(&family),
        sign_balance(&family),
        quaternion_triples(&family),
        circle_premultiplication(&family),
        adjoint_inverse(&family, cap.min(4), coord_take.min(6)),
        frequency_law(&family, cap, coord_take),
        exponent_additivity(&family, cap, pow_pairs),
        hermiticity(&family, cap),
        epr_agreement(&family, cap.min(4), epr_take, &links),
        mixed_link_deviation(&family),
        epr_marginals(&family, cap.min(3), 60),
        ghz_consistency(&family, ghz_take),
        dispersion_bound(config),
        celestial_roundtrip(config, roundtrip_take),
        niven_consistency(60),
        sine_partner_parity(8),
    ];
    let (defined_outcome, _) = definability_enumeration(config, config.max_resolution().min(5));
    out.push(defined_outcome);
    out.push(lattice_cardinality_note(config));
    out.push(sampling_determinism(&family, samples.clamp(1, 200_000), seed));

    Ok(out)
}
