//! Named, reproducible checks that replay the decomposition identities,
//! witness colons, saturation laws, and membership-degree statements for
//! the ideal family, emitting one structured report per check and
//! parameter point. Every equality is an exact comparison of reduced
//! Groebner bases; budget overruns downgrade a check to `skipped` with
//! diagnostics rather than guessing a verdict.

use crate::catalog::{Catalog, MMParams};
use crate::error::CoreError;
use crate::field::Field;
use crate::groebner::{normal_form, Budget};
use crate::ideal::Ideal;
use crate::ops::{self, Ctx};
use crate::order::MonomialOrder;
use crate::parse::print_poly;
use crate::poly::Poly;
use crate::rep;
use crate::ring::Ring;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

/// Default verifier prime: both 2 and 3 divide 13 - 1 = 12, as does the
/// tower order 4 needed at (3,2), so one prime serves the whole grid.
pub const DEFAULT_VERIFY_PRIME: u64 = 13;
/// Default number of randomized trials for the ideal-law check.
pub const DEFAULT_TRIALS: u32 = 200;
/// Parameter points exercised on every run.
pub const FAST_GRID: [(u32, u32); 2] = [(2, 2), (2, 3)];
/// Parameter point added by the slow tier.
pub const SLOW_POINT: (u32, u32) = (3, 2);

/// Outcome of one check at one parameter point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Every sub-check held.
    Pass,
    /// At least one sub-check failed; the details name it.
    Fail,
    /// Not run to completion: out of tier, out of range, or over budget.
    Skipped,
}

impl Verdict {
    /// Lower-case label used in reports and JSON output.
    pub fn label(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Skipped => "skipped",
        }
    }
}

/// Effort tier: `Fast` covers (2,2) and (2,3); `Slow` adds (3,2).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tier {
    Fast,
    Slow,
}

/// Mutation hook for coverage testing: before use, the named closed-form
/// ideal gets one generator bumped by 1, which must flip some check.
#[derive(Clone, Debug)]
pub struct FaultSpec {
    /// Tap label of the ideal to perturb, e.g. "j-hat" or "q1-union".
    pub target: String,
    /// Index (mod generator count) of the generator to perturb.
    pub generator: usize,
}

/// Knobs shared by every check invocation.
#[derive(Clone, Debug)]
pub struct RunOptions {
    /// Which parameter points run to completion.
    pub tier: Tier,
    /// Coefficient prime; `None` means [`DEFAULT_VERIFY_PRIME`].
    pub prime: Option<u64>,
    /// Seed for the randomized ideal-law trials.
    pub seed: u64,
    /// Trial count for the randomized ideal-law check.
    pub trials: u32,
    /// S-pair budget handed to every Groebner run.
    pub budget: Budget,
    /// Zero out wall-clock fields so reports compare byte for byte.
    pub deterministic: bool,
    /// Optional single-generator perturbation for mutation coverage.
    pub fault: Option<FaultSpec>,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            tier: Tier::Fast,
            prime: None,
            seed: 1,
            trials: DEFAULT_TRIALS,
            budget: Budget::DEFAULT,
            deterministic: false,
            fault: None,
        }
    }
}

/// Result of one check at one parameter point.
#[derive(Clone, Debug)]
pub struct CheckReport {
    /// Check id, e.g. "q1-family" or "level-chain-r2".
    pub check: String,
    /// Tower width.
    pub n: u32,
    /// Tower degree.
    pub d: u32,
    /// Coefficient prime.
    pub p: u64,
    /// Aggregate verdict over all sub-checks.
    pub verdict: Verdict,
    /// Wall-clock time; zero under the deterministic flag or without std.
    pub millis: u64,
    /// Notes, witness payloads, and one line per failed sub-check.
    pub details: Vec<String>,
}

/// True when any report in the slice failed.
pub fn has_failure(reports: &[CheckReport]) -> bool {
    reports.iter().any(|r| r.verdict == Verdict::Fail)
}

/// Builds the parameter point the verifier uses for (n, d): the promised
/// root order is the full tower order, and the prime defaults to
/// [`DEFAULT_VERIFY_PRIME`].
pub fn verify_params(n: u32, d: u32, prime: Option<u64>) -> Result<MMParams, CoreError> {
    if n < 2 || d < 2 {
        return Err(CoreError::BadParams(format!(
            "parameters must satisfy n >= 2 and d >= 2, got n={n}, d={d}"
        )));
    }
    let probe = MMParams {
        n,
        d,
        field: Field::new(3, 2)?,
    };
    let order = probe.root_order()?;
    let p = prime.unwrap_or(DEFAULT_VERIFY_PRIME);
    MMParams::new(n, d, Field::new(p, order)?)
}

/// Adds 1 to one generator, yielding a strictly different ideal whenever
/// the original was proper; used by the mutation-coverage harness.
pub fn perturb_generator(i: &Ideal, index: usize) -> Ideal {
    let ring = i.ring().clone();
    let mut gens: Vec<Poly> = i.generators().to_vec();
    if gens.is_empty() {
        gens.push(Poly::one(&ring));
    } else {
        let k = index % gens.len();
        gens[k] = gens[k].add_ref(&Poly::one(&ring));
    }
    Ideal::new(&ring, gens)
}

#[cfg(feature = "std")]
fn clock_start() -> Option<std::time::Instant> {
    Some(std::time::Instant::now())
}

#[cfg(not(feature = "std"))]
fn clock_start() -> Option<()> {
    None
}

#[cfg(feature = "std")]
fn clock_millis(start: Option<std::time::Instant>, deterministic: bool) -> u64 {
    match (start, deterministic) {
        (Some(t), false) => t.elapsed().as_millis() as u64,
        _ => 0,
    }
}

#[cfg(not(feature = "std"))]
fn clock_millis(_start: Option<()>, _deterministic: bool) -> u64 {
    0
}

/// Shared state for one check run: catalog, context, fault hook, and the
/// accumulated detail lines and failure flag.
struct Session {
    cat: Catalog,
    cx: Ctx,
    fault: Option<FaultSpec>,
    details: Vec<String>,
    failed: bool,
}

impl Session {
    fn new(params: &MMParams, opts: &RunOptions) -> Result<Session, CoreError> {
        Ok(Session {
            cat: Catalog::new(*params)?,
            cx: Ctx::new(opts.budget),
            fault: opts.fault.clone(),
            details: Vec::new(),
            failed: false,
        })
    }

    /// Passes the ideal through, unless the fault hook names this label,
    /// in which case one generator is perturbed.
    fn tap(&mut self, label: &str, ideal: Ideal) -> Ideal {
        match &self.fault {
            Some(f) if f.target == label => {
                self.details
                    .push(format!("fault injected: {label} generator {}", f.generator));
                perturb_generator(&ideal, f.generator)
            }
            _ => ideal,
        }
    }

    fn note(&mut self, line: String) {
        self.details.push(line);
    }

    fn fail(&mut self, label: &str, payload: String) {
        self.failed = true;
        if payload.is_empty() {
            self.details.push(format!("fail: {label}"));
        } else {
            self.details.push(format!("fail: {label}; {payload}"));
        }
    }

    fn claim(&mut self, label: &str, ok: bool) {
        if !ok {
            self.fail(label, String::new());
        }
    }

    /// Exact reduced-basis equality; on failure the payload names one
    /// basis element present on only one side.
    fn claim_equal(&mut self, label: &str, lhs: &Ideal, rhs: &Ideal) -> Result<(), CoreError> {
        if ops::equals(&self.cx, lhs, rhs)? {
            return Ok(());
        }
        let payload = self.discrepancy(lhs, rhs)?;
        self.fail(label, payload);
        Ok(())
    }

    fn claim_unequal(&mut self, label: &str, lhs: &Ideal, rhs: &Ideal) -> Result<(), CoreError> {
        if ops::equals(&self.cx, lhs, rhs)? {
            self.fail(label, String::from("ideals coincide"));
        }
        Ok(())
    }

    fn claim_contains(&mut self, label: &str, big: &Ideal, small: &Ideal) -> Result<(), CoreError> {
        if !ops::contains(&self.cx, big, small)? {
            let gb = big.groebner(MonomialOrder::Grevlex, self.cx.budget)?;
            let culprit = small
                .generators()
                .iter()
                .find(|g| !normal_form(g, &gb).is_zero())
                .map(|g| print_poly(g, MonomialOrder::Grevlex))
                .unwrap_or_default();
            self.fail(label, format!("not contained: {culprit}"));
        }
        Ok(())
    }

    fn claim_member(&mut self, label: &str, f: &Poly, i: &Ideal) -> Result<(), CoreError> {
        if !ops::is_member(&self.cx, f, i)? {
            self.fail(label, format!("not a member: {}", print_poly(f, MonomialOrder::Grevlex)));
        }
        Ok(())
    }

    fn claim_not_member(&mut self, label: &str, f: &Poly, i: &Ideal) -> Result<(), CoreError> {
        if ops::is_member(&self.cx, f, i)? {
            self.fail(label, format!("unexpected member: {}", print_poly(f, MonomialOrder::Grevlex)));
        }
        Ok(())
    }

    /// Colon by an element, plus the containment law every colon obeys.
    fn colon_tracked(&mut self, label: &str, i: &Ideal, g: &Poly) -> Result<Ideal, CoreError> {
        let out = ops::colon_poly(&self.cx, i, g)?;
        if !ops::contains(&self.cx, &out, i)? {
            self.fail(label, String::from("colon result does not contain the original"));
        }
        Ok(out)
    }

    /// One reduced-basis element distinguishing two unequal ideals.
    fn discrepancy(&self, lhs: &Ideal, rhs: &Ideal) -> Result<String, CoreError> {
        let ga = lhs.groebner(MonomialOrder::Grevlex, self.cx.budget)?;
        let gb = rhs.groebner(MonomialOrder::Grevlex, self.cx.budget)?;
        for p in ga.polys() {
            if !normal_form(p, &gb).is_zero() {
                return Ok(format!("only on the left: {}", print_poly(p, MonomialOrder::Grevlex)));
            }
        }
        for p in gb.polys() {
            if !normal_form(p, &ga).is_zero() {
                return Ok(format!("only on the right: {}", print_poly(p, MonomialOrder::Grevlex)));
            }
        }
        Ok(String::from("bases agree; equality raced a fault hook"))
    }
}

/// Runs a check body under budget protection and assembles the report.
fn run_guarded<F>(
    check: &str,
    params: &MMParams,
    opts: &RunOptions,
    body: F,
) -> Result<CheckReport, CoreError>
where
    F: FnOnce(&mut Session) -> Result<(), CoreError>,
{
    let start = clock_start();
    let mut s = Session::new(params, opts)?;
    let verdict = match body(&mut s) {
        Ok(()) => {
            if s.failed {
                Verdict::Fail
            } else {
                Verdict::Pass
            }
        }
        Err(CoreError::BudgetExceeded { spairs }) => {
            s.details
                .push(format!("skipped: S-pair budget exceeded after {spairs} pairs"));
            Verdict::Skipped
        }
        Err(e) => return Err(e),
    };
    let mut details = s.details;
    if params.n == 2 {
        details.push(String::from(
            "note: at n = 2 the closing companion generator is b04^d c12 (b12 - b13); \
             no level-two c variables exist, so none appears in it",
        ));
    }
    Ok(CheckReport {
        check: check.to_string(),
        n: params.n,
        d: params.d,
        p: params.field.modulus(),
        verdict,
        millis: clock_millis(start, opts.deterministic),
        details,
    })
}

/// A report for a check that cannot run at this point or tier.
fn skipped_report(check: &str, params: &MMParams, why: &str) -> CheckReport {
    let mut details = vec![format!("skipped: {why}")];
    if params.n == 2 {
        details.push(String::from(
            "note: at n = 2 the closing companion generator is b04^d c12 (b12 - b13); \
             no level-two c variables exist, so none appears in it",
        ));
    }
    CheckReport {
        check: check.to_string(),
        n: params.n,
        d: params.d,
        p: params.field.modulus(),
        verdict: Verdict::Skipped,
        millis: 0,
        details,
    }
}

// ---------------------------------------------------------------------------
// Randomized ideal-law check
// ---------------------------------------------------------------------------

fn random_term(rng: &mut ChaCha8Rng, ring: &Arc<Ring>, vars: &[usize]) -> Poly {
    let p = ring.field().modulus();
    let c = 1 + rng.next_u64() % (p - 1);
    let mut t = Poly::constant(ring, c);
    let factors = 1 + rng.next_u64() % 2;
    for _ in 0..factors {
        let v = vars[(rng.next_u64() as usize) % vars.len()];
        t = &t * &Poly::var(ring, v);
    }
    t
}

fn random_poly(rng: &mut ChaCha8Rng, ring: &Arc<Ring>, vars: &[usize]) -> Poly {
    let terms = 1 + rng.next_u64() % 3;
    let mut out = Poly::zero(ring);
    for _ in 0..terms {
        out = out.add_ref(&random_term(rng, ring, vars));
    }
    if out.is_zero() {
        Poly::var(ring, vars[0])
    } else {
        out
    }
}

fn random_ideal(rng: &mut ChaCha8Rng, ring: &Arc<Ring>, vars: &[usize]) -> Ideal {
    let count = 2 + rng.next_u64() % 2;
    let gens = (0..count).map(|_| random_poly(rng, ring, vars)).collect();
    Ideal::new(ring, gens)
}

fn print_gens(i: &Ideal) -> String {
    let parts: Vec<String> = i
        .generators()
        .iter()
        .map(|g| print_poly(g, MonomialOrder::Grevlex))
        .collect();
    format!("({})", parts.join(", "))
}

/// Randomized replay of the quotient-ring laws the decomposition proofs
/// lean on: the modular law, the principal-intersection law, the shifted
/// colon law, the saturation splitting law, and the disjoint-block
/// product law.
pub fn check_facts(params: &MMParams, opts: &RunOptions) -> Result<CheckReport, CoreError> {
    if opts.trials == 0 {
        return Err(CoreError::BadParams(String::from("trials must be at least 1")));
    }
    let seed = opts.seed;
    run_guarded("facts", params, opts, |s| {
        let field = s.cat.params().field;
        let ring = Ring::new(field, &["x", "y", "z", "w"]);
        let split = Ring::new(field, &["x1", "x2", "y1", "y2"]);
        let all = [0usize, 1, 2, 3];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let cx = s.cx;
        for trial in 0..opts.trials {
            let i = random_ideal(&mut rng, &ring, &all);
            let iprime = random_ideal(&mut rng, &ring, &all);
            let extra = random_ideal(&mut rng, &ring, &all);
            let x = Poly::var(&ring, (rng.next_u64() as usize) % 4);
            let xi = Ideal::new(&ring, vec![x.clone()]);

            // Modular law: with I contained in I'', (I + I') meet I''
            // equals I + (I' meet I'').
            let idp = ops::sum(&i, &extra);
            let lhs = ops::intersect(&cx, &ops::sum(&i, &iprime), &idp)?;
            let rhs = ops::sum(&i, &ops::intersect(&cx, &iprime, &idp)?);
            if !ops::equals(&cx, &lhs, &rhs)? {
                s.fail(
                    "modular law",
                    format!("trial {trial}, seed {seed}: I = {}, I' = {}, I'' = {}", print_gens(&i), print_gens(&iprime), print_gens(&idp)),
                );
                break;
            }

            // Principal intersection: (x) meet I = x (I : x).
            let lhs = ops::intersect(&cx, &xi, &i)?;
            let rhs = ops::product(&xi, &ops::colon_poly(&cx, &i, &x)?);
            if !ops::equals(&cx, &lhs, &rhs)? {
                s.fail(
                    "principal intersection law",
                    format!("trial {trial}, seed {seed}: x = {}, I = {}", print_poly(&x, MonomialOrder::Grevlex), print_gens(&i)),
                );
                break;
            }

            // Shifted colon: (I + x I') : x = (I : x) + I'.
            let lhs = ops::colon_poly(&cx, &ops::sum(&i, &ops::product(&xi, &iprime)), &x)?;
            let rhs = ops::sum(&ops::colon_poly(&cx, &i, &x)?, &iprime);
            if !ops::equals(&cx, &lhs, &rhs)? {
                s.fail(
                    "shifted colon law",
                    format!("trial {trial}, seed {seed}: x = {}, I = {}, I' = {}", print_poly(&x, MonomialOrder::Grevlex), print_gens(&i), print_gens(&iprime)),
                );
                break;
            }

            // Saturation splitting: with (S, k) the saturation of I at f,
            // I = S meet (I + (f^k)).
            let f = random_poly(&mut rng, &ring, &all);
            let (sat, k) = ops::saturate(&cx, &i, &f)?;
            let fk = Ideal::new(&ring, vec![f.pow(k)]);
            let back = ops::intersect(&cx, &sat, &ops::sum(&i, &fk))?;
            if !ops::equals(&cx, &i, &back)? {
                s.fail(
                    "saturation splitting law",
                    format!("trial {trial}, seed {seed}: f = {}, k = {k}, I = {}", print_poly(&f, MonomialOrder::Grevlex), print_gens(&i)),
                );
                break;
            }

            // Disjoint blocks: ideals in disjoint variable blocks satisfy
            // I meet J = I J.
            let a = random_ideal(&mut rng, &split, &[0, 1]);
            let b = random_ideal(&mut rng, &split, &[2, 3]);
            let mut lhs = ops::intersect(&cx, &a, &b)?;
            if trial == 0 {
                lhs = s.tap("facts", lhs);
            }
            let rhs = ops::product(&a, &b);
            if !ops::equals(&cx, &lhs, &rhs)? {
                s.fail(
                    "disjoint block law",
                    format!("trial {trial}, seed {seed}: I = {}, J = {}", print_gens(&a), print_gens(&b)),
                );
                break;
            }
        }
        if !s.failed {
            s.note(format!("{} randomized trials passed (seed {seed})", opts.trials));
        }
        Ok(())
    })
}

// ---------------------------------------------------------------------------
// Associatedness witness search
// ---------------------------------------------------------------------------

/// Searches for an element g with base : g = target, which certifies the
/// target prime as associated to base (and to every ideal base is a colon
/// of). Candidates come from the reduced basis of base : target, their
/// pairwise products, and a depth-limited colon refinement.
pub fn find_assoc_witness(
    cx: &Ctx,
    base: &Ideal,
    target: &Ideal,
    depth: u32,
) -> Result<Option<Poly>, CoreError> {
    let ring = base.ring().clone();
    if ops::equals(cx, base, target)? {
        return Ok(Some(Poly::one(&ring)));
    }
    let quotient = ops::colon_ideal(cx, base, target)?;
    let gb = quotient.groebner(MonomialOrder::Grevlex, cx.budget)?;
    let mut cands: Vec<Poly> = Vec::new();
    for g in gb.polys().iter() {
        if !ops::is_member(cx, g, base)? {
            cands.push(g.clone());
        }
    }
    cands.sort_by_key(|g| (g.total_deg(), g.num_terms()));
    for g in cands.iter().take(24) {
        if ops::equals(cx, &ops::colon_poly(cx, base, g)?, target)? {
            return Ok(Some(g.clone()));
        }
    }
    let head: Vec<Poly> = cands.iter().take(10).cloned().collect();
    for (i, gi) in head.iter().enumerate() {
        for gj in head.iter().skip(i + 1) {
            let g = gi * gj;
            if ops::equals(cx, &ops::colon_poly(cx, base, &g)?, target)? {
                return Ok(Some(g));
            }
        }
    }
    if depth > 0 {
        for g in cands.iter().take(4) {
            let refined = ops::colon_poly(cx, base, g)?;
            if ops::equals(cx, &refined, base)? {
                continue;
            }
            if refined.groebner(MonomialOrder::Grevlex, cx.budget)?.is_unit() {
                continue;
            }
            if let Some(w) = find_assoc_witness(cx, &refined, target, depth - 1)? {
                return Ok(Some(g * &w));
            }
        }
    }
    Ok(None)
}

// ---------------------------------------------------------------------------
// Q1 family
// ---------------------------------------------------------------------------

/// Replays the first saturation identity and the Q1 component catalog:
/// saturating J at f c02 c03 (c02 - c03) yields P-3 meet the Q1 union,
/// the union is the intersection of the sixteen components, each witness
/// colon isolates its component, and the separator element tells the
/// empty-set component apart from the four singletons.
pub fn check_q1(params: &MMParams, opts: &RunOptions) -> Result<CheckReport, CoreError> {
    run_guarded("q1-family", params, opts, |s| {
        let cx = s.cx;
        let j = {
            let raw = s.cat.ideal_j();
            s.tap("j", raw)
        };
        let pneg3 = {
            let raw = s.cat.p_neg3_ideal();
            s.tap("p-neg3", raw)
        };
        let q1u = {
            let raw = s.cat.q1_union();
            s.tap("q1-union", raw)
        };
        let multiplier = {
            let c02 = s.cat.c(0, 2);
            let c03 = s.cat.c(0, 3);
            &(&s.cat.f() * &c02) * &(&c03 * &(&c02 - &c03))
        };

        let (sat, k) = ops::saturate(&cx, &j, &multiplier)?;
        s.note(format!("saturation exponent discovered: {k}"));
        let expected = ops::intersect(&cx, &pneg3, &q1u)?;
        s.claim_equal("saturation of J equals P-3 meet the Q1 union", &sat, &expected)?;

        let components: Vec<Ideal> = (0u8..16).map(|m| s.cat.q1_component(m)).collect();
        let tapped: Vec<Ideal> = components
            .into_iter()
            .enumerate()
            .map(|(m, c)| s.tap(&format!("q1-component-{m}"), c))
            .collect();
        let refs: Vec<&Ideal> = tapped.iter().collect();
        let meet = ops::intersect_many(&cx, &refs)?;
        s.claim_equal("Q1 union equals the meet of all sixteen components", &q1u, &meet)?;

        for mask in 1u8..16 {
            let w = s.cat.q1_witness(mask);
            let colon = s.colon_tracked("Q1 witness colon containment", &sat, &w)?;
            let expected = ops::intersect(&cx, &pneg3, &tapped[mask as usize])?;
            s.claim_equal(
                &format!("witness colon isolates Q1 component {mask:04b}"),
                &colon,
                &expected,
            )?;
        }

        let sep = s.cat.q1_separator();
        let singles: Vec<&Ideal> = [1u8, 2, 4, 8].iter().map(|&m| &tapped[m as usize]).collect();
        let mut factors: Vec<&Ideal> = vec![&pneg3];
        factors.extend(singles);
        let meet_singles = ops::intersect_many(&cx, &factors)?;
        s.claim_member("separator lies in P-3 and the four singleton components", &sep, &meet_singles)?;
        s.claim_not_member("separator avoids the empty-set component", &sep, &tapped[0])?;
        Ok(())
    })
}

// ---------------------------------------------------------------------------
// The x-multiplier chain (Q2, Q3, and the n = 2 Q4 cluster)
// ---------------------------------------------------------------------------

/// Replays the x-multiplier chain: J : x in closed form, its residue and
/// colon ladder down to the three-factor decomposition, and the witness
/// saturations certifying the Q2, Q3, and (n = 2) Q4 primes associated.
pub fn check_x_chain(params: &MMParams, opts: &RunOptions) -> Result<CheckReport, CoreError> {
    run_guarded("x-chain", params, opts, |s| {
        let cx = s.cx;
        let n = s.cat.params().n;
        let d = s.cat.params().d;
        let j = {
            let raw = s.cat.ideal_j();
            s.tap("j", raw)
        };
        let x = s.cat.x_multiplier();
        s.note(format!("x = {}", print_poly(&x, MonomialOrder::Grevlex)));

        let jhat = {
            let raw = s.cat.j_hat();
            s.tap("j-hat", raw)
        };
        s.claim_contains("J is contained in J : x", &jhat, &j)?;
        for g in jhat.generators() {
            s.claim_member("x multiplies J : x into J", &(&x * g), &j)?;
        }
        let computed = s.colon_tracked("J : x containment", &j, &x)?;
        s.claim_equal("J : x matches its closed form", &computed, &jhat)?;

        let residue = {
            let raw = s.cat.c02_residue();
            s.tap("c02-residue", raw)
        };
        let c02 = s.cat.c(0, 2);
        let plus = ops::sum(&jhat, &Ideal::new(s.cat.ring(), vec![c02.clone()]));
        s.claim_equal("(J : x) + (c02) matches its closed form", &plus, &residue)?;
        let p0 = s.cat.minimal_p0()?.ideal;
        let pneg2 = s.cat.p_neg2_component();
        let expected = ops::intersect(&cx, &p0, &pneg2)?;
        s.claim_equal("(J : x) + (c02) equals P0 meet the P-2 component", &residue, &expected)?;

        let hc = {
            let raw = s.cat.j_hat_colon_c02();
            s.tap("j-hat-colon-c02", raw)
        };
        let computed = s.colon_tracked("(J : x) : c02 containment", &jhat, &c02)?;
        s.claim_equal("(J : x) : c02 matches its closed form", &computed, &hc)?;

        let b02d = s.cat.b(0, 2).pow(d);
        let hb = s.cat.j_hat_colon_c02_plus_b02d();
        let plus = ops::sum(&hc, &Ideal::new(s.cat.ring(), vec![b02d.clone()]));
        s.claim_equal("((J : x) : c02) + (b02^d) matches its closed form", &plus, &hb)?;
        let pneg4 = s.cat.p_neg4_intersection();
        let pneg3 = s.cat.p_neg3_ideal();
        let q1u = s.cat.q1_union();
        let expected = ops::intersect_many(&cx, &[&pneg4, &pneg3, &q1u])?;
        s.claim_equal(
            "((J : x) : c02) + (b02^d) equals the P-4, P-3, Q1 meet",
            &hb,
            &expected,
        )?;

        let hcb = {
            let raw = s.cat.j_hat_colon_c02_b02d();
            s.tap("j-hat-colon-c02-b02d", raw)
        };
        let computed = s.colon_tracked("(J : x) : c02 b02^d containment", &jhat, &(&c02 * &b02d))?;
        s.claim_equal("(J : x) : c02 b02^d matches its closed form", &computed, &hcb)?;

        let jpp = {
            let raw = s.cat.j_hat_double_prime();
            s.tap("j-hat-double-prime", raw)
        };
        let plus = ops::sum(&hcb, &Ideal::new(s.cat.ring(), vec![b02d.clone()]));
        s.claim_equal("((J : x) : c02 b02^d) + (b02^d) matches its closed form", &plus, &jpp)?;
        let row = {
            let raw = s.cat.j_hat_double_prime_row();
            s.tap("row", raw)
        };
        let row_reduced = {
            let raw = s.cat.j_hat_double_prime_row_reduced();
            s.tap("row-reduced", raw)
        };
        let q2u = {
            let raw = s.cat.q2_union();
            s.tap("q2-union", raw)
        };
        let q3u = {
            let raw = s.cat.q3_union();
            s.tap("q3-union", raw)
        };
        let expected = ops::intersect(&cx, &row, &q2u)?;
        s.claim_equal("the b02^d residue splits along the Q2 union", &jpp, &expected)?;
        let expected = ops::intersect(&cx, &row_reduced, &q3u)?;
        s.claim_equal("the first row splits along the Q3 union", &row, &expected)?;
        s.claim_contains("the reduced row absorbs the Q2 union", &row_reduced, &q2u)?;

        let jp = {
            let raw = s.cat.j_hat_prime();
            s.tap("j-hat-prime", raw)
        };
        let computed = s.colon_tracked(
            "(J : x) : c02 b02^{2d} containment",
            &jhat,
            &(&c02 * &b02d.pow(2)),
        )?;
        s.claim_equal("(J : x) : c02 b02^{2d} matches its closed form", &computed, &jp)?;
        let p1 = {
            let raw = s.cat.aux_p(1)?;
            s.tap("p-1", raw)
        };
        if n == 2 {
            let p2 = s.cat.aux_p(2)?;
            let q42 = {
                let raw = s.cat.q42_component();
                s.tap("q42-component", raw)
            };
            let expected = ops::intersect_many(&cx, &[&p1, &p2, &q42])?;
            s.claim_equal("the deep colon splits into p_1, p_2, and the Q4 component", &jp, &expected)?;

            // Each factor's radical avoids c02, so one more colon by c02
            // fixes the deep colon; the two-factor form p_2 meet Q4 exceeds
            // it exactly by the p_1 factor.
            let jpc = s.colon_tracked("deep colon by c02 containment", &jp, &c02)?;
            s.claim_equal("c02 is a non-zerodivisor on the deep colon", &jpc, &jp)?;
            let pq = ops::intersect(&cx, &p2, &q42)?;
            s.claim_unequal("the Q4 component is not absorbed by p_2", &pq, &p2)?;

            let roots = s.cat.roots(d as u64)?;
            let mut certified = 0u32;
            for &a in &roots {
                for &b in &roots {
                    let entry = s.cat.q42_prime(a, b)?;
                    if a == b {
                        s.claim_contains(
                            &format!("{} contains p_2 and drops out", entry.id),
                            &entry.ideal,
                            &p2,
                        )?;
                        continue;
                    }
                    match find_assoc_witness(&cx, &jpc, &entry.ideal, 2)? {
                        Some(w) => {
                            certified += 1;
                            s.note(format!(
                                "{} associated; witness {}",
                                entry.id,
                                print_poly(&w, MonomialOrder::Grevlex)
                            ));
                        }
                        None => s.fail(
                            &format!("associatedness witness for {}", entry.id),
                            String::from("no colon witness found"),
                        ),
                    }
                }
            }
            s.note(format!(
                "n = 2 mixed-root Q4 primes certified: {certified}; \
                 equal-root primes contain p_2 and stay candidate-only"
            ));
        } else {
            s.claim_equal("the deep colon collapses to p_1 at n > 2", &jp, &p1)?;
        }

        // Witness saturations for the Q2 and Q3 families, all from the
        // same base ideal (J : x) : c02 b02^d.
        let roots = s.cat.roots(d as u64)?;
        let mut q2_certified = 0u32;
        for mask in 0u8..16 {
            let w = s.cat.q2_witness(mask);
            let (kk, exp) = ops::saturate(&cx, &hcb, &w)?;
            if mask == 0 {
                s.note(format!("empty-set witness saturation exponent: {exp}"));
                s.claim_equal("the empty-set witness saturation collapses to p_1", &kk, &p1)?;
                continue;
            }
            for &a in &roots {
                let entry = s.cat.q2_prime(mask, a)?;
                match find_assoc_witness(&cx, &kk, &entry.ideal, 2)? {
                    Some(_) => q2_certified += 1,
                    None => s.fail(
                        &format!("associatedness witness for {}", entry.id),
                        String::from("no colon witness found"),
                    ),
                }
            }
        }
        s.note(format!("Q2 primes certified: {q2_certified}"));

        let mut q3_certified = 0u32;
        for mask in 1u8..16 {
            let w = s.cat.q3_witness(mask);
            let (kk, _exp) = ops::saturate(&cx, &hcb, &w)?;
            let entry = s.cat.q3_prime(mask)?;
            match find_assoc_witness(&cx, &kk, &entry.ideal, 2)? {
                Some(_) => q3_certified += 1,
                None => s.fail(
                    &format!("associatedness witness for {}", entry.id),
                    String::from("no colon witness found"),
                ),
            }
        }
        s.note(format!("Q3 primes certified: {q3_certified}"));
        let proved = crate::catalog::proved_count(n, d)?;
        s.note(format!(
            "closed-form proved-associated total for this point: {proved}; \
             this chain certifies the Q2, Q3, and level-two Q4 portions"
        ));
        if n == 2 {
            s.note(String::from(
                "the closed-form tally counts every root pair in the Q4 family; \
                 the witness search certifies the mixed pairs only",
            ));
        }
        Ok(())
    })
}

// ---------------------------------------------------------------------------
// Level-r chain (n > 2)
// ---------------------------------------------------------------------------

/// Replays the level-r multiplier chain at n > 2: the closed form of
/// J : x_r, the rewriting-chain membership products, the two-factor
/// decomposition of the deep colon, redundancy of the equal-root
/// component, and colon witnesses for the mixed-root primes.
pub fn check_level_chain(
    params: &MMParams,
    r: u32,
    opts: &RunOptions,
) -> Result<CheckReport, CoreError> {
    let check = format!("level-chain-r{r}");
    if params.n <= 2 {
        return Ok(skipped_report(&check, params, "needs n > 2"));
    }
    if r < 2 || r > params.n {
        return Err(CoreError::BadParams(format!(
            "level {r} out of range 2..={}",
            params.n
        )));
    }
    run_guarded(&check, params, opts, |s| {
        let cx = s.cx;
        let d = s.cat.params().d;
        let j = {
            let raw = s.cat.ideal_j();
            s.tap("j", raw)
        };
        let x = s.cat.x_multiplier_level(r)?;
        s.note(format!("x_{r} = {}", print_poly(&x, MonomialOrder::Grevlex)));

        let k_closed = {
            let raw = s.cat.j_hat_level(r)?;
            s.tap("j-hat-level", raw)
        };
        s.claim_contains("J is contained in J : x_r", &k_closed, &j)?;
        for g in k_closed.generators() {
            s.claim_member("x_r multiplies J : x_r into J", &(&x * g), &j)?;
        }
        let b03_2d = s.cat.b(0, 3).pow(2 * d);
        let c02 = s.cat.c(0, 2);
        let c11 = s.cat.c(1, 1);
        let c13 = s.cat.c(1, 3);
        for i in 1..=4 {
            let rewrite = &(&(&c02 * &b03_2d) * &(&c11 * &c13))
                * &(&(&Poly::one(s.cat.ring()) - &s.cat.b(2, i)) * &x);
            s.claim_member("the rewriting-chain product lands in J", &rewrite, &j)?;
        }
        let computed = s.colon_tracked("J : x_r containment", &j, &x)?;
        s.claim_equal("J : x_r matches its closed form", &computed, &k_closed)?;

        let m = s.cat.level_multiplier();
        let display = {
            let raw = s.cat.s_level_display(r)?;
            s.tap("s-level-display", raw)
        };
        let computed = s.colon_tracked("deep level colon containment", &k_closed, &m)?;
        s.claim_equal("the deep level colon matches its closed form", &computed, &display)?;

        let first = s.cat.s_level_first(r)?;
        let pr = {
            let raw = s.cat.aux_p(r)?;
            s.tap("p-r", raw)
        };
        s.claim_equal("the first factor presents p_r", &first, &pr)?;
        let second = {
            let raw = s.cat.s_level_second(r)?;
            s.tap("s-level-second", raw)
        };
        let expected = ops::intersect(&cx, &pr, &second)?;
        s.claim_equal("the deep level colon splits as p_r meet the Q4 cluster", &display, &expected)?;

        let roots = s.cat.roots(d as u64)?;
        let mut primes: Vec<Ideal> = Vec::new();
        for &a in &roots {
            for &b in &roots {
                for &g in &roots {
                    let ideal = s.cat.q4_level_ideal(r, a, b, g)?;
                    s.claim_contains(
                        &format!("the Q4 cluster lies under the root triple ({a},{b},{g})"),
                        &ideal,
                        &second,
                    )?;
                    primes.push(ideal);
                }
            }
        }
        let refs: Vec<&Ideal> = primes.iter().collect();
        let radical_frame = ops::intersect_many(&cx, &refs)?;
        for g in radical_frame.generators() {
            if !ops::radical_member(&cx, g, &second)? {
                s.fail(
                    "the root-triple meet lies in the radical of the Q4 cluster",
                    format!("not radical-member: {}", print_poly(g, MonomialOrder::Grevlex)),
                );
            }
        }

        for &a in &roots {
            let equal_triple = s.cat.q4_level_ideal(r, a, a, a)?;
            s.claim_contains(
                &format!("the equal-root prime at {a} absorbs p_r (redundancy)"),
                &equal_triple,
                &pr,
            )?;
        }

        let mut certified = 0u32;
        for &a in &roots {
            for &b in &roots {
                for &g in &roots {
                    if a == b && b == g {
                        continue;
                    }
                    let entry = s.cat.q4_prime(r, a, b, g)?;
                    match find_assoc_witness(&cx, &display, &entry.ideal, 2)? {
                        Some(w) => {
                            certified += 1;
                            s.note(format!(
                                "{} associated; witness {}",
                                entry.id,
                                print_poly(&w, MonomialOrder::Grevlex)
                            ));
                        }
                        None => s.fail(
                            &format!("associatedness witness for {}", entry.id),
                            String::from("no colon witness found"),
                        ),
                    }
                }
            }
        }
        s.note(format!("level-{r} mixed-root primes certified: {certified}"));
        Ok(())
    })
}

// ---------------------------------------------------------------------------
// The s-colon ladder
// ---------------------------------------------------------------------------

/// Replays the s-colon ladder: the six-factor decomposition of J + (s),
/// the closed form of J : s, the c02 residue, the five displayed colon
/// formulas, the bridge to the companion family, and the level-one
/// branch decompositions.
pub fn check_s_chain(params: &MMParams, opts: &RunOptions) -> Result<CheckReport, CoreError> {
    run_guarded("s-chain", params, opts, |s| {
        let cx = s.cx;
        let n = s.cat.params().n;
        let d = s.cat.params().d;
        let j = {
            let raw = s.cat.ideal_j();
            s.tap("j", raw)
        };
        let sv = s.cat.s();
        let f = s.cat.f();
        let c02 = s.cat.c(0, 2);
        let c11 = s.cat.c(1, 1);
        let b01d = s.cat.b(0, 1).pow(d);
        let b03 = s.cat.b(0, 3);

        let factors = s.cat.j_plus_s_factors();
        let refs: Vec<&Ideal> = factors.iter().collect();
        let expected = ops::intersect_many(&cx, &refs)?;
        let plus_s = ops::sum(&j, &Ideal::new(s.cat.ring(), vec![sv.clone()]));
        s.claim_equal("J + (s) splits into its six components", &plus_s, &expected)?;

        let js_closed = {
            let raw = s.cat.j_colon_s();
            s.tap("j-colon-s", raw)
        };
        let js = s.colon_tracked("J : s containment", &j, &sv)?;
        s.claim_equal("J : s matches its closed form", &js, &js_closed)?;

        let c0 = s.cat.aux_c(0)?;
        let plus = ops::sum(&js_closed, &Ideal::new(s.cat.ring(), vec![c02.clone()]));
        s.claim_equal("(J : s) + (c02) collapses to the level-zero coordinates", &plus, &c0)?;

        let jsc_closed = {
            let raw = s.cat.j_colon_s_c02();
            s.tap("j-colon-s-c02", raw)
        };
        let jsc = s.colon_tracked("J : s c02 containment", &j, &(&sv * &c02))?;
        s.claim_equal("J : s c02 matches its closed form", &jsc, &jsc_closed)?;

        let sq_closed = {
            let raw = s.cat.j_colon_s_c02_sq();
            s.tap("j-colon-s-c02-sq", raw)
        };
        let sq = s.colon_tracked("J : s c02^2 containment", &j, &(&sv * &c02.pow(2)))?;
        s.claim_equal("J : s c02^2 matches its closed form", &sq, &sq_closed)?;

        let pc_closed = {
            let raw = s.cat.j_colon_s_c02_plus_c02();
            s.tap("plus-c02", raw)
        };
        let pc = ops::sum(&jsc_closed, &Ideal::new(s.cat.ring(), vec![c02.clone()]));
        s.claim_equal("(J : s c02) + (c02) matches its closed form", &pc, &pc_closed)?;

        let pcf_colon_closed = {
            let raw = s.cat.j_colon_s_c02_plus_c02_colon_f();
            s.tap("plus-c02-colon-f", raw)
        };
        let colon_f = s.colon_tracked("((J : s c02) + (c02)) : f containment", &pc_closed, &f)?;
        s.claim_equal("((J : s c02) + (c02)) : f matches its closed form", &colon_f, &pcf_colon_closed)?;

        let pcf_closed = {
            let raw = s.cat.j_colon_s_c02_plus_c02_f();
            s.tap("plus-c02-f", raw)
        };
        let pcf = ops::sum(
            &jsc_closed,
            &Ideal::new(s.cat.ring(), vec![c02.clone(), f.clone()]),
        );
        s.claim_equal("(J : s c02) + (c02, f) matches its closed form", &pcf, &pcf_closed)?;

        let k_family = {
            let raw = s.cat.ideal_k();
            s.tap("k-family", raw)
        };
        let sf = Ideal::new(s.cat.ring(), vec![sv.clone(), f.clone()]);
        let bridge = ops::sum_many(&[&k_family, &c0, &sf]);
        s.claim_equal(
            "(J : s c02) + (c02, f) bridges to the companion family",
            &pcf_closed,
            &bridge,
        )?;

        // Level-one branch: both presentations of L, with their heads.
        let head_a = s.cat.substituted_head();
        let branch_a = {
            let raw = s.cat.branch_ideal(&head_a);
            s.tap("branch-a", raw)
        };
        let la = s.colon_tracked(
            "J : s c02^2 b01^d containment",
            &j,
            &(&(&sv * &c02.pow(2)) * &b01d),
        )?;
        s.claim_equal("J : s c02^2 b01^d matches the branch closed form", &la, &branch_a)?;

        let head_b = c0.clone();
        let branch_b = {
            let raw = s.cat.branch_ideal(&head_b);
            s.tap("branch-b", raw)
        };
        let lb = s.colon_tracked(
            "((J : s c02) + (c02)) : f b01^d containment",
            &pc_closed,
            &(&f * &b01d),
        )?;
        s.claim_equal(
            "((J : s c02) + (c02)) : f b01^d matches the branch closed form",
            &lb,
            &branch_b,
        )?;

        for (tag, branch, head) in [("a", &branch_a, &head_a), ("b", &branch_b, &head_b)] {
            let plus_c11 = ops::sum(branch, &Ideal::new(s.cat.ring(), vec![c11.clone()]));
            let expected = ops::sum(head, &s.cat.aux_p(1)?);
            s.claim_equal(
                &format!("branch {tag} plus (c11) equals its head plus p_1"),
                &plus_c11,
                &expected,
            )?;
            let colon = s.colon_tracked(
                &format!("branch {tag} colon by c11 b03 containment"),
                branch,
                &(&c11 * &b03),
            )?;
            let mut meets: Vec<Ideal> = Vec::new();
            for r in 2..=n {
                meets.push(ops::sum(head, &s.cat.aux_p(r)?));
            }
            let refs: Vec<&Ideal> = meets.iter().collect();
            let expected = ops::intersect_many(&cx, &refs)?;
            s.claim_equal(
                &format!("branch {tag} colon by c11 b03 meets the level primes"),
                &colon,
                &expected,
            )?;
        }

        let core: Vec<String> = s
            .cat
            .j2_triple_prime()
            .generators()
            .iter()
            .map(|g| print_poly(g, MonomialOrder::Grevlex))
            .collect();
        s.note(format!(
            "level-one shadow core generators recorded for inspection: {}",
            core.join("; ")
        ));
        Ok(())
    })
}

// ---------------------------------------------------------------------------
// Membership degree and radical checks
// ---------------------------------------------------------------------------

/// Replays the bounded-degree membership statement: the probe element
/// lies in J : s, and s times each listed generator of J : s admits a
/// representation over J with multiplier degrees at most 2d + 1.
pub fn check_membership_degree(
    params: &MMParams,
    opts: &RunOptions,
) -> Result<CheckReport, CoreError> {
    run_guarded("membership-degree", params, opts, |s| {
        let d = s.cat.params().d;
        let j = {
            let raw = s.cat.ideal_j();
            s.tap("j", raw)
        };
        let sv = s.cat.s();
        let probe = s.cat.membership_probe();
        s.claim_member("the probe element lies in J : s", &(&sv * &probe), &j)?;

        let js = {
            let raw = s.cat.j_colon_s();
            s.tap("j-colon-s", raw)
        };
        let bound = 2 * d + 1;
        for a in js.generators() {
            let rep = rep::bounded_degree_representation(&(&sv * a), &j, bound)?;
            if rep.is_none() {
                s.fail(
                    &format!("degree-{bound} representation exists"),
                    format!("no representation for s * ({})", print_poly(a, MonomialOrder::Grevlex)),
                );
            }
        }
        s.note(format!(
            "all {} listed generators admit multiplier degree <= {bound}",
            js.num_gens()
        ));

        let control = rep::bounded_degree_representation(&Poly::one(s.cat.ring()), &j, 0)?;
        s.claim("the degree-0 negative control finds nothing", control.is_none());
        Ok(())
    })
}

/// Replays the non-radical statement: s c02 (b01 - b04) lies in the
/// radical of J but not in J.
pub fn check_not_radical(params: &MMParams, opts: &RunOptions) -> Result<CheckReport, CoreError> {
    run_guarded("not-radical", params, opts, |s| {
        let cx = s.cx;
        let j = {
            let raw = s.cat.ideal_j();
            s.tap("j", raw)
        };
        let probe = s.cat.non_radical_probe();
        if !ops::radical_member(&cx, &probe, &j)? {
            s.fail(
                "the probe lies in the radical of J",
                print_poly(&probe, MonomialOrder::Grevlex),
            );
        }
        s.claim_not_member("the probe lies outside J itself", &probe, &j)?;
        Ok(())
    })
}

// ---------------------------------------------------------------------------
// Registry and dispatch
// ---------------------------------------------------------------------------

/// Check ids in fixed execution order for a point with the given n.
pub fn registry(n: u32) -> Vec<String> {
    let mut ids = vec![String::from("facts"), String::from("q1-family"), String::from("x-chain")];
    if n > 2 {
        for r in 2..=n {
            ids.push(format!("level-chain-r{r}"));
        }
    } else {
        ids.push(String::from("level-chain"));
    }
    ids.push(String::from("s-chain"));
    ids.push(String::from("membership-degree"));
    ids.push(String::from("not-radical"));
    ids
}

/// Runs one named check (or the level-chain group) at one point.
pub fn run_check(
    id: &str,
    params: &MMParams,
    opts: &RunOptions,
) -> Result<Vec<CheckReport>, CoreError> {
    match id {
        "facts" => Ok(vec![check_facts(params, opts)?]),
        "q1-family" => Ok(vec![check_q1(params, opts)?]),
        "x-chain" => Ok(vec![check_x_chain(params, opts)?]),
        "s-chain" => Ok(vec![check_s_chain(params, opts)?]),
        "membership-degree" => Ok(vec![check_membership_degree(params, opts)?]),
        "not-radical" => Ok(vec![check_not_radical(params, opts)?]),
        "level-chain" => {
            if params.n <= 2 {
                return Ok(vec![skipped_report("level-chain", params, "needs n > 2")]);
            }
            let mut out = Vec::new();
            for r in 2..=params.n {
                out.push(check_level_chain(params, r, opts)?);
            }
            Ok(out)
        }
        other => {
            if let Some(tail) = other.strip_prefix("level-chain-r") {
                let r: u32 = tail
                    .parse()
                    .map_err(|_| CoreError::BadParams(format!("unknown check id: {other}")))?;
                return Ok(vec![check_level_chain(params, r, opts)?]);
            }
            Err(CoreError::BadParams(format!("unknown check id: {other}")))
        }
    }
}

/// Runs the full registry at one point, in registry order.
pub fn run_params(params: &MMParams, opts: &RunOptions) -> Result<Vec<CheckReport>, CoreError> {
    let mut out = Vec::new();
    for id in registry(params.n) {
        out.extend(run_check(&id, params, opts)?);
    }
    Ok(out)
}

/// Runs the whole grid: (2,2) and (2,3) always, and (3,2) when the slow
/// tier is enabled; without it the (3,2) entries appear as skipped.
pub fn run_all(opts: &RunOptions) -> Result<Vec<CheckReport>, CoreError> {
    let mut out = Vec::new();
    for (n, d) in FAST_GRID {
        let params = verify_params(n, d, opts.prime)?;
        out.extend(run_params(&params, opts)?);
    }
    let (n, d) = SLOW_POINT;
    let params = verify_params(n, d, opts.prime)?;
    match opts.tier {
        Tier::Slow => out.extend(run_params(&params, opts)?),
        Tier::Fast => {
            for id in registry(params.n) {
                out.push(skipped_report(&id, &params, "slow-tier point; enable the slow tier to run it"));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts() -> RunOptions {
        RunOptions { trials: 25, deterministic: true, ..RunOptions::default() }
    }

    #[test]
    fn zero_trials_is_a_parameter_error() {
        let params = verify_params(2, 2, None).unwrap();
        let bad = RunOptions { trials: 0, ..RunOptions::default() };
        assert!(matches!(check_facts(&params, &bad), Err(CoreError::BadParams(_))));
    }

    #[test]
    fn facts_pass_and_are_deterministic() {
        let params = verify_params(2, 2, None).unwrap();
        let a = check_facts(&params, &opts()).unwrap();
        let b = check_facts(&params, &opts()).unwrap();
        assert_eq!(a.verdict, Verdict::Pass);
        assert_eq!(a.details, b.details);
        assert_eq!(a.millis, 0);
        assert_eq!((a.n, a.d, a.p), (2, 2, 13));
    }

    #[test]
    fn facts_fault_injection_fails_with_payload() {
        let params = verify_params(2, 2, None).unwrap();
        let faulted = RunOptions {
            trials: 2,
            deterministic: true,
            fault: Some(FaultSpec { target: String::from("facts"), generator: 0 }),
            ..RunOptions::default()
        };
        let report = check_facts(&params, &faulted).unwrap();
        assert_eq!(report.verdict, Verdict::Fail);
        assert!(report.details.iter().any(|l| l.contains("disjoint block law")));
    }

    #[test]
    fn unknown_check_id_is_an_error() {
        let params = verify_params(2, 2, None).unwrap();
        assert!(matches!(
            run_check("no-such-check", &params, &opts()),
            Err(CoreError::BadParams(_))
        ));
    }

    #[test]
    fn level_chain_is_skipped_at_n_2() {
        let params = verify_params(2, 2, None).unwrap();
        let reports = run_check("level-chain", &params, &opts()).unwrap();
        assert_eq!(reports.len(), 1);
        assert_eq!(reports[0].verdict, Verdict::Skipped);
        assert_eq!(reports[0].check, "level-chain");
    }

    #[test]
    fn registry_orders_are_fixed() {
        assert_eq!(
            registry(2),
            ["facts", "q1-family", "x-chain", "level-chain", "s-chain", "membership-degree", "not-radical"]
        );
        assert_eq!(
            registry(3),
            [
                "facts",
                "q1-family",
                "x-chain",
                "level-chain-r2",
                "level-chain-r3",
                "s-chain",
                "membership-degree",
                "not-radical"
            ]
        );
    }

    #[test]
    fn verify_params_pins_the_default_prime() {
        let params = verify_params(3, 2, None).unwrap();
        assert_eq!(params.field.modulus(), 13);
        assert!(verify_params(2, 3, Some(5)).is_err(), "5 has no cube roots of unity");
        assert_eq!(verify_params(2, 2, Some(5)).unwrap().field.modulus(), 5);
    }

    #[test]
    fn perturbation_always_changes_a_proper_ideal() {
        let params = verify_params(2, 2, None).unwrap();
        let cat = Catalog::new(params).unwrap();
        let cx = Ctx::new(Budget::DEFAULT);
        let i = cat.j_hat();
        let perturbed = perturb_generator(&i, 3);
        assert!(!ops::equals(&cx, &i, &perturbed).unwrap());
    }

    #[test]
    fn not_radical_check_passes_at_2_2() {
        let params = verify_params(2, 2, None).unwrap();
        let report = check_not_radical(&params, &opts()).unwrap();
        assert_eq!(report.verdict, Verdict::Pass, "details: {:?}", report.details);
    }

    #[test]
    fn fault_on_j_flips_the_not_radical_check() {
        let params = verify_params(2, 2, None).unwrap();
        let faulted = RunOptions {
            deterministic: true,
            fault: Some(FaultSpec { target: String::from("j"), generator: 0 }),
            ..RunOptions::default()
        };
        let report = check_not_radical(&params, &faulted).unwrap();
        assert_eq!(report.verdict, Verdict::Fail);
    }
}
