//! Seeded verification suites: each one replays a family of exact claims
//! from the library against randomized instances and reports per-check
//! outcomes with the first counterexample found.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use polyclass::amoeba::{
    amoeba_member, component_label, sample_amoeba, LogPoint, MemberStatus,
    DEFAULT_PHASE_GRID, DEFAULT_TOL_INSIDE, DEFAULT_TOL_OUTSIDE,
};
use polyclass::archgeo::{cone_member, Cone, ConeSpec, Region};
use polyclass::discriminant::discriminant_value;
use polyclass::multiplier::{
    corollary1_check, fiber_path_check, ms_check, s_vector, trinomial_pj, witness_ii_search,
    witness_si_search, MsKind, TrinomialSide,
};
use polyclass::realroots::{classify, is_real_rooted, root_report, si_check_exhaustive};
use polyclass::{GammaSeq, Poly};
use serde::Serialize;

use crate::randgen::Gen;
use crate::{to_json, CliError, Rendered, SuiteArg};

#[derive(Serialize)]
pub struct CheckResult {
    name: &'static str,
    pass: bool,
    cases: usize,
    counterexample: Option<String>,
}

#[derive(Serialize)]
pub struct SuiteReport {
    suite: &'static str,
    seed: u64,
    checks: Vec<CheckResult>,
    passed: bool,
}

#[derive(Serialize)]
struct AggregateReport {
    seed: u64,
    suites: Vec<SuiteReport>,
    passed: bool,
}

/// Accumulates cases for one named check, keeping the first counterexample.
struct Check {
    name: &'static str,
    cases: usize,
    failure: Option<String>,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Check { name, cases: 0, failure: None }
    }

    fn case(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(describe());
        }
    }

    fn finish(self) -> CheckResult {
        CheckResult {
            name: self.name,
            pass: self.failure.is_none(),
            cases: self.cases,
            counterexample: self.failure,
        }
    }
}

pub fn run(
    suite: SuiteArg,
    seed: u64,
    n: Option<usize>,
    samples: Option<usize>,
) -> Result<Rendered, CliError> {
    if suite == SuiteArg::All {
        let mut suites = Vec::new();
        for s in [
            SuiteArg::ThmA,
            SuiteArg::ThmB,
            SuiteArg::Thm1,
            SuiteArg::Thm2,
            SuiteArg::Cor1,
            SuiteArg::Lemma1,
            SuiteArg::Lemma2,
            SuiteArg::Cones,
            SuiteArg::Amoeba,
        ] {
            suites.push(run_one(s, seed, n, samples)?);
        }
        let passed = suites.iter().all(|s| s.passed);
        let body = to_json(&AggregateReport { seed, suites, passed })?;
        return Ok(Rendered { body, ok: passed });
    }
    let report = run_one(suite, seed, n, samples)?;
    let ok = report.passed;
    Ok(Rendered { body: to_json(&report)?, ok })
}

fn run_one(
    suite: SuiteArg,
    seed: u64,
    n: Option<usize>,
    samples: Option<usize>,
) -> Result<SuiteReport, CliError> {
    let (name, checks) = match suite {
        SuiteArg::ThmA => ("thmA", suite_thm_a(seed, n.unwrap_or(120), samples.unwrap_or(40))?),
        SuiteArg::ThmB => ("thmB", suite_thm_b(seed, n.unwrap_or(120), samples.unwrap_or(40))?),
        SuiteArg::Thm1 => ("thm1", suite_thm1(seed, n.unwrap_or(200), samples.unwrap_or(500))?),
        SuiteArg::Thm2 => ("thm2", suite_thm2(seed, n.unwrap_or(100))?),
        SuiteArg::Cor1 => ("cor1", suite_cor1(seed, n.unwrap_or(60))?),
        SuiteArg::Lemma1 => ("lemma1", suite_lemma1()?),
        SuiteArg::Lemma2 => ("lemma2", suite_lemma2(seed, samples.unwrap_or(8))?),
        SuiteArg::Cones => ("cones", suite_cones(seed, n.unwrap_or(200))?),
        SuiteArg::Amoeba => {
            ("amoeba", suite_amoeba(seed, n.unwrap_or(24), samples.unwrap_or(10_000))?)
        }
        SuiteArg::All => unreachable!("aggregated in run"),
    };
    let passed = checks.iter().all(|c| c.pass);
    Ok(SuiteReport { suite: name, seed, checks, passed })
}

/// First-kind oracle: the binomial-image test against sampled preservation
/// of real-rootedness.
fn suite_thm_a(seed: u64, n: usize, samples: usize) -> Result<Vec<CheckResult>, CliError> {
    let mut g = Gen::new(seed);
    let mut preserve = Check::new("passing_sequences_preserve_real_rootedness");
    let mut defeat = Check::new("failing_sequences_carry_a_checkable_witness");
    let mut split = Check::new("both_verdicts_occur");
    let (mut saw_pass, mut saw_fail) = (false, false);
    for _ in 0..n {
        let len = g.usize_in(3, 6);
        let gamma = g.gamma(len);
        let verdict = ms_check(&gamma, MsKind::Kind1Finite)?;
        if verdict.pass {
            saw_pass = true;
            for _ in 0..samples {
                let p = g.real_rooted_poly(len - 1);
                let image = gamma.apply(&p)?;
                let ok = image.is_zero() || is_real_rooted(&image)?;
                preserve.case(ok, || format!("gamma=({gamma}) p=({p}) image=({image})"));
            }
        } else {
            saw_fail = true;
            let ok = match &verdict.witness {
                Some(w) => !classify(&gamma.apply(w)?)?.in_ss,
                None => false,
            };
            defeat.case(ok, || format!("gamma=({gamma})"));
        }
    }
    split.case(saw_pass && saw_fail, || "generator produced only one verdict".into());
    Ok(vec![preserve.finish(), defeat.finish(), split.finish()])
}

/// Second-kind oracle: same-sign-rooted inputs must map into real-rooted
/// images exactly when the binomial image is real-rooted; first kind nests
/// into second kind.
fn suite_thm_b(seed: u64, n: usize, samples: usize) -> Result<Vec<CheckResult>, CliError> {
    let mut g = Gen::new(seed);
    let mut preserve = Check::new("passing_sequences_map_same_sign_roots_to_real_roots");
    let mut defeat = Check::new("failing_sequences_carry_a_checkable_witness");
    let mut nest = Check::new("first_kind_passes_imply_second_kind_passes");
    for _ in 0..n {
        let len = g.usize_in(3, 6);
        let gamma = g.gamma(len);
        let second = ms_check(&gamma, MsKind::Kind2Finite)?;
        let first = ms_check(&gamma, MsKind::Kind1Finite)?;
        nest.case(!first.pass || second.pass, || format!("gamma=({gamma})"));
        if second.pass {
            for _ in 0..samples {
                let p = g.same_sign_poly(len - 1);
                let image = gamma.apply(&p)?;
                let ok = image.is_zero() || is_real_rooted(&image)?;
                preserve.case(ok, || format!("gamma=({gamma}) p=({p}) image=({image})"));
            }
        } else {
            let ok = match &second.witness {
                Some(w) => !is_real_rooted(&gamma.apply(w)?)?,
                None => false,
            };
            defeat.case(ok, || format!("gamma=({gamma})"));
        }
    }
    Ok(vec![preserve.finish(), defeat.finish(), nest.finish()])
}

/// Log-concavity in both directions, plus closure under entrywise products.
fn suite_thm1(seed: u64, n: usize, pairs: usize) -> Result<Vec<CheckResult>, CliError> {
    let mut g = Gen::new(seed);
    // Witness pool per degree, grown by verified images so later draws see
    // polynomials beyond the canonical scaled family.
    let mut pool: Vec<Vec<Poly>> = (0..=7).map(|_| Vec::new()).collect();
    for (k, slot) in pool.iter_mut().enumerate().take(7).skip(2) {
        let one = BigRational::one();
        slot.push(witness_si_search(k, &one)?.1);
    }
    let mut preserve = Check::new("log_concave_sequences_preserve_the_class");
    for _ in 0..n {
        let len = g.usize_in(3, 7);
        let gamma = g.log_concave_gamma(len);
        let deg = g.usize_in(2, (len - 1).min(6));
        let pick = g.usize_in(0, pool[deg].len() - 1);
        let image = gamma.apply(&pool[deg][pick])?;
        let ok = si_check_exhaustive(&image)?;
        preserve.case(ok, || format!("gamma=({gamma}) image=({image})"));
        if ok && pool[deg].len() < 12 {
            pool[deg].push(image);
        }
    }
    let mut defeat = Check::new("violating_sequences_are_defeated_by_the_attached_witness");
    for _ in 0..n {
        let len = g.usize_in(3, 7);
        let gamma = g.non_log_concave_gamma(len);
        let verdict = ms_check(&gamma, MsKind::Kind3)?;
        let ok = match (&verdict.witness, verdict.failing_index) {
            (Some(w), Some(i)) if !verdict.pass => {
                let e = gamma.entries();
                let violated = &e[i] * &e[i] < &e[i - 1] * &e[i + 1];
                violated && !is_real_rooted(&gamma.apply(w)?)?
            }
            _ => false,
        };
        defeat.case(ok, || format!("gamma=({gamma})"));
    }
    let mut hadamard = Check::new("admissible_sequences_close_under_entrywise_products");
    for _ in 0..pairs {
        let len = g.usize_in(3, 7);
        let a = g.log_concave_gamma(len);
        let b = g.log_concave_gamma(len);
        let product = a.hadamard(&b)?;
        let ok = ms_check(&a, MsKind::Kind3)?.pass
            && ms_check(&b, MsKind::Kind3)?.pass
            && ms_check(&product, MsKind::Kind3)?.pass;
        hadamard.case(ok, || format!("a=({a}) b=({b})"));
    }
    Ok(vec![preserve.finish(), defeat.finish(), hadamard.finish()])
}

fn abs_coeffs(p: &Poly) -> Poly {
    Poly::new(p.coeffs().iter().map(|c| c.abs()).collect())
}

/// Power-dominance condition: exact trinomial facts, preservation of the
/// maximally-imaginary class, trinomial defeat, and the divergence between
/// the literal and normalized forms of the inequality.
fn suite_thm2(seed: u64, n: usize) -> Result<Vec<CheckResult>, CliError> {
    let mut g = Gen::new(seed);
    let eps = BigRational::new(1.into(), 10.into());

    let mut degenerate = Check::new("boundary_trinomials_have_a_double_root_at_one");
    let mut inward = Check::new("inward_perturbation_keeps_maximal_imaginarity");
    let mut outward = Check::new("outward_perturbation_leaves_the_class");
    for k in 2..=5usize {
        for j in 1..k {
            let p0 = trinomial_pj(k, j, &eps, TrinomialSide::Unperturbed)?;
            let one = BigRational::one();
            let ok = discriminant_value(&p0)? == BigRational::zero()
                && p0.eval(&one) == BigRational::zero()
                && p0.derivative().eval(&one) == BigRational::zero();
            degenerate.case(ok, || format!("k={k} j={j} p=({p0})"));

            let pm = trinomial_pj(k, j, &eps, TrinomialSide::Minus)?;
            let report = root_report(&pm)?;
            let ok = report.total_real_with_mult == k % 2
                && classify(&abs_coeffs(&pm))?.in_ii_geq;
            inward.case(ok, || format!("k={k} j={j} p=({pm})"));

            let pp = trinomial_pj(k, j, &eps, TrinomialSide::Plus)?;
            let report = root_report(&pp)?;
            let ok = report.total_real_with_mult >= k % 2 + 2
                && !classify(&abs_coeffs(&pp))?.in_ii_geq;
            outward.case(ok, || format!("k={k} j={j} p=({pp})"));
        }
    }

    // Two maximally-imaginary witnesses per degree, at different scales.
    let mut witnesses: Vec<Vec<Poly>> = (0..=5).map(|_| Vec::new()).collect();
    for (k, slot) in witnesses.iter_mut().enumerate().take(6).skip(2) {
        for start in [2i64, 101] {
            let s = BigRational::from_integer(start.into());
            slot.push(witness_ii_search(k, &s)?.1);
        }
    }
    let mut preserve = Check::new("passing_sequences_preserve_maximal_imaginarity");
    let mut defeat = Check::new("failing_sequences_are_defeated_on_a_trinomial");
    let mut diverge = Check::new("literal_and_normalized_forms_diverge");
    let mut divergences = 0usize;
    let explicit = GammaSeq::from_integers(&[2, 2, 2]);
    for i in 0..n {
        let gamma = if i == 0 {
            explicit.clone()
        } else {
            let len = g.usize_in(3, 6);
            g.gamma(len)
        };
        let k = gamma.len() - 1;
        let normalized = ms_check(&gamma, MsKind::Thm2Normalized)?;
        let literal = ms_check(&gamma, MsKind::Thm2Literal)?;
        if normalized.pass != literal.pass {
            divergences += 1;
        }
        if normalized.pass {
            for q in &witnesses[k] {
                let image = gamma.apply(q)?;
                let ok = classify(&image)?.in_ii_geq;
                preserve.case(ok, || format!("gamma=({gamma}) q=({q}) image=({image})"));
            }
        } else {
            let ok = match (&normalized.witness, normalized.failing_index) {
                (Some(w), Some(j)) => {
                    // The proof's padded sequence: ones everywhere except the
                    // endpoints and the failing index.
                    let mut entries = vec![BigRational::one(); k + 1];
                    entries[0] = gamma.entry(0).clone();
                    entries[j] = gamma.entry(j).clone();
                    entries[k] = gamma.entry(k).clone();
                    let padded = GammaSeq::new(entries)?;
                    !classify(&abs_coeffs(&padded.apply(w)?))?.in_ii_geq
                }
                _ => false,
            };
            defeat.case(ok, || format!("gamma=({gamma})"));
        }
    }
    diverge.case(divergences > 0, || "no divergence observed".into());
    // Record how often the two forms disagreed, not just that they did.
    diverge.cases = divergences.max(1);
    Ok(vec![
        degenerate.finish(),
        inward.finish(),
        outward.finish(),
        preserve.finish(),
        diverge.finish(),
        defeat.finish(),
    ])
}

/// Structural consequences of sign-independent real-rootedness on randomly
/// produced members of the class.
fn suite_cor1(seed: u64, n: usize) -> Result<Vec<CheckResult>, CliError> {
    let mut g = Gen::new(seed);
    let mut structure = Check::new("class_members_pass_the_structural_matrix");
    for _ in 0..n {
        let k = g.usize_in(2, 6);
        let one = BigRational::one();
        let mut p = witness_si_search(k, &one)?.1;
        if g.bool() {
            p = g.log_concave_gamma(k + 1).apply(&p)?;
        }
        let report = corollary1_check(&p)?;
        structure.case(report.pass, || format!("p=({p})"));
    }
    Ok(vec![structure.finish()])
}

/// Closed-form concave integer profiles and the scaled witness families.
fn suite_lemma1() -> Result<Vec<CheckResult>, CliError> {
    let mut shape = Check::new("profiles_are_symmetric_and_strictly_concave");
    for k in 2..=10usize {
        let s = s_vector(k)?;
        let e = s.entries();
        let symmetric = (0..e.len()).all(|j| e[j] == e[e.len() - 1 - j]);
        let concave = (0..e.len()).all(|j| {
            let prev = if j == 0 { 0 } else { e[j - 1] };
            let next = if j + 1 == e.len() { 0 } else { e[j + 1] };
            2 * e[j] > prev + next
        });
        shape.case(symmetric && concave, || format!("k={k} s={e:?}"));
    }
    let mut pinned = Check::new("pinned_profiles_match");
    pinned.case(s_vector(4)?.entries() == [2u32, 3, 2], || "k=4".into());
    pinned.case(s_vector(7)?.entries() == [3u32, 5, 6, 6, 5, 3], || "k=7".into());
    pinned.case(
        s_vector(10)?.entries() == [5u32, 9, 12, 14, 15, 14, 12, 9, 5],
        || "k=10".into(),
    );

    let mut si = Check::new("scaled_witnesses_reach_sign_independence");
    for k in 2..=6usize {
        let one = BigRational::one();
        let (lambda, p) = witness_si_search(k, &one)?;
        let ok = lambda.is_positive() && si_check_exhaustive(&p)?;
        si.case(ok, || format!("k={k} lambda={lambda}"));
    }
    let mut ii = Check::new("scaled_witnesses_reach_maximal_imaginarity");
    for k in 2..=6usize {
        let two = BigRational::from_integer(2.into());
        let (lambda, q) = witness_ii_search(k, &two)?;
        let ok = lambda > BigRational::one() && classify(&q)?.in_ii_geq;
        ii.case(ok, || format!("k={k} lambda={lambda}"));
    }
    Ok(vec![shape.finish(), pinned.finish(), si.finish(), ii.finish()])
}

/// Constant-coefficient deformation paths and their endpoint quotients.
fn suite_lemma2(seed: u64, steps: usize) -> Result<Vec<CheckResult>, CliError> {
    let mut g = Gen::new(seed);
    let mut path = Check::new("deformation_paths_stay_in_class");
    for k in 2..=5usize {
        let one = BigRational::one();
        let base = witness_si_search(k, &one)?.1;
        let image = g.log_concave_gamma(k + 1).apply(&base)?;
        for p in [base, image] {
            let ok = match fiber_path_check(&p, steps) {
                Ok(report) => {
                    report.quotient.degree() == k - 1
                        && classify(&report.quotient)?.in_si_geq
                }
                Err(_) => false,
            };
            path.case(ok, || format!("k={k} p=({p})"));
        }
    }
    let mut reject = Check::new("non_members_are_rejected");
    let outside = Poly::from_integers(&[1, 1, 1, 1]);
    reject.case(
        matches!(fiber_path_check(&outside, 4), Err(polyclass::Error::NotSiGeq)),
        || "1+x+x^2+x^3 was accepted".into(),
    );
    Ok(vec![path.finish(), reject.finish()])
}

/// Exact cone geometry: pinned boundary cases, nesting, scale invariance,
/// and the positivity precondition.
fn suite_cones(seed: u64, n: usize) -> Result<Vec<CheckResult>, CliError> {
    let mut g = Gen::new(seed);
    let q = |v: &[i64]| -> Vec<BigRational> {
        v.iter().map(|&x| BigRational::from_integer(x.into())).collect()
    };

    let mut pinned = Check::new("pinned_memberships_match");
    let square = cone_member(ConeSpec { cone: Cone::Strengthened, k: 2 }, &q(&[1, 2, 1]))?;
    pinned.case(square.region == Region::Boundary && square.tight == vec![1], || {
        "(1,2,1) strengthened".into()
    });
    let interior = cone_member(ConeSpec { cone: Cone::Strengthened, k: 3 }, &q(&[1, 9, 9, 1]))?;
    pinned.case(interior.region == Region::Interior, || "(1,9,9,1) strengthened".into());
    let tenth = BigRational::new(1.into(), 10.into());
    let qk = vec![
        BigRational::one(),
        tenth.clone(),
        tenth,
        BigRational::one(),
    ];
    let endpoint = cone_member(ConeSpec { cone: Cone::EndpointDominance, k: 3 }, &qk)?;
    pinned.case(endpoint.region == Region::Interior, || "(1,1/10,1/10,1) endpoint".into());

    let mut nested = Check::new("strengthened_cone_sits_inside_the_log_concave_cone");
    let mut scale = Check::new("memberships_are_scale_invariant");
    for _ in 0..n {
        let len = g.usize_in(3, 7);
        let k = len - 1;
        let a = g.positive_vector(len);
        let strong = cone_member(ConeSpec { cone: Cone::Strengthened, k }, &a)?;
        let weak = cone_member(ConeSpec { cone: Cone::LogConcave, k }, &a)?;
        let inside_ok = strong.region != Region::Interior || weak.region == Region::Interior;
        let violated_ok = weak.violated.iter().all(|i| strong.violated.contains(i));
        nested.case(inside_ok && violated_ok, || format!("a={a:?}"));

        let lambda = g.positive_rational();
        let scaled: Vec<BigRational> = a.iter().map(|x| x * &lambda).collect();
        let mut ok = true;
        for cone in [Cone::LogConcave, Cone::Strengthened, Cone::EndpointDominance] {
            let before = cone_member(ConeSpec { cone, k }, &a)?;
            let after = cone_member(ConeSpec { cone, k }, &scaled)?;
            ok &= before == after;
        }
        scale.case(ok, || format!("a={a:?} lambda={lambda}"));
    }

    let mut positive = Check::new("membership_requires_positive_entries");
    let zeroed = q(&[1, 0, 1]);
    positive.case(
        matches!(
            cone_member(ConeSpec { cone: Cone::LogConcave, k: 2 }, &zeroed),
            Err(polyclass::Error::NonPositiveEntry { index: 1 })
        ),
        || "zero entry accepted".into(),
    );
    Ok(vec![pinned.finish(), nested.finish(), scale.finish(), positive.finish()])
}

/// Amoeba geometry at k = 3: projection invariance, locations of the two
/// distinguished complement components, recession growth, the cone
/// exclusions that hold exactly, and membership of sampled points.
fn suite_amoeba(seed: u64, n: usize, samples: usize) -> Result<Vec<CheckResult>, CliError> {
    let mut g = Gen::new(seed);
    let k = 3usize;

    let mut projection = Check::new("membership_is_invariant_under_slice_projection");
    for _ in 0..n.min(8) {
        let coords: Vec<f64> =
            (0..=k).map(|_| g.usize_in(0, 600) as f64 / 100.0 - 3.0).collect();
        let x = LogPoint::new(coords);
        let interior = &x.slice()[1..k];
        let y = LogPoint::from_slice_interior(interior);
        let vx = amoeba_member(k, &x, 64, DEFAULT_TOL_INSIDE, DEFAULT_TOL_OUTSIDE)?;
        let vy = amoeba_member(k, &y, 64, DEFAULT_TOL_INSIDE, DEFAULT_TOL_OUTSIDE)?;
        let ok = vx.status == vy.status
            && vx.min_abs_delta.to_bits() == vy.min_abs_delta.to_bits();
        projection.case(ok, || format!("x={:?}", x.coords));
    }

    let mut landmarks = Check::new("distinguished_points_sit_outside_with_matching_labels");
    let ln9 = 9f64.ln();
    let si_point = LogPoint::from_slice_interior(&[ln9, ln9]);
    let si_verdict =
        amoeba_member(k, &si_point, DEFAULT_PHASE_GRID, DEFAULT_TOL_INSIDE, DEFAULT_TOL_OUTSIDE)?;
    let si_label = component_label(k, &si_point)?;
    landmarks.case(
        si_verdict.status == MemberStatus::Outside && si_label.subdivision.is_finest(),
        || "(ln 9, ln 9)".into(),
    );
    let ii_point = LogPoint::from_slice_interior(&[-ln9, -ln9]);
    let ii_verdict =
        amoeba_member(k, &ii_point, DEFAULT_PHASE_GRID, DEFAULT_TOL_INSIDE, DEFAULT_TOL_OUTSIDE)?;
    let ii_label = component_label(k, &ii_point)?;
    landmarks.case(
        ii_verdict.status == MemberStatus::Outside && ii_label.subdivision.is_trivial(),
        || "(-ln 9, -ln 9)".into(),
    );

    let mut recession = Check::new("recession_directions_stay_outside_with_growing_margin");
    for dir in [1.0f64, -1.0] {
        let mut last = 0.0f64;
        let mut ok = true;
        for t in 0..3 {
            let c = dir * (ln9 + t as f64);
            let x = LogPoint::from_slice_interior(&[c, c]);
            let v = amoeba_member(k, &x, 128, DEFAULT_TOL_INSIDE, DEFAULT_TOL_OUTSIDE)?;
            ok &= v.status == MemberStatus::Outside && v.min_abs_delta >= last;
            last = v.min_abs_delta;
        }
        recession.case(ok, || format!("direction {dir}"));
    }

    // The double-root locus can cross the strengthened cone: its translate
    // supports the unbounded component from below, and near the corner the
    // locus pokes past the translate by up to ln(sqrt(9 + 6 sqrt 3) / 4),
    // about 0.096 at k = 3. The exclusions that do hold exactly: the strict
    // interior of the endpoint-dominance cone never meets the sampled cloud,
    // and a double root with positive real coefficients is incompatible with
    // strict strengthened-cone membership.
    let mut trivial_cone = Check::new("samples_avoid_the_endpoint_dominance_interior");
    let cloud = sample_amoeba(k, samples, seed)?;
    let mut violations = 0usize;
    for x in &cloud {
        let s = x.slice();
        if s[1..k].iter().all(|&v| v < 0.0) {
            violations += 1;
        }
    }
    trivial_cone
        .case(violations == 0, || format!("{violations} of {samples} points inside"));
    trivial_cone.cases = samples.max(1);

    let mut real_double = Check::new("real_double_roots_stay_off_the_strengthened_interior");
    for _ in 0..n {
        let deg = g.usize_in(2, 5);
        let mut roots = Vec::with_capacity(deg);
        let t = -g.positive_rational();
        roots.push(t.clone());
        roots.push(t);
        for _ in 2..deg {
            roots.push(-g.positive_rational());
        }
        let p = Poly::from_roots(&roots);
        let verdict =
            cone_member(ConeSpec { cone: Cone::Strengthened, k: deg }, p.coeffs())?;
        real_double.case(verdict.region != Region::Interior, || format!("roots {roots:?}"));
    }

    let mut si_cone = Check::new("class_members_land_in_the_strengthened_cone");
    for deg in 2..=5usize {
        let witness = witness_si_search(deg, &BigRational::one())?.1;
        let image = g.log_concave_gamma(deg + 1).apply(&witness)?;
        for p in [witness, image] {
            let verdict =
                cone_member(ConeSpec { cone: Cone::Strengthened, k: deg }, p.coeffs())?;
            si_cone.case(verdict.region != Region::Outside, || format!("p=({p})"));
        }
    }

    let mut inside = Check::new("sampled_points_are_inside");
    for x in cloud.iter().take(n.min(10)) {
        let v = amoeba_member(k, x, DEFAULT_PHASE_GRID, DEFAULT_TOL_INSIDE, DEFAULT_TOL_OUTSIDE)?;
        inside.case(v.status == MemberStatus::Inside, || {
            format!("point {:?} min {}", x.slice(), v.min_abs_delta)
        });
    }

    Ok(vec![
        projection.finish(),
        landmarks.finish(),
        recession.finish(),
        trivial_cone.finish(),
        real_double.finish(),
        si_cone.finish(),
        inside.finish(),
    ])
}
