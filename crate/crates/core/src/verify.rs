//! Reproducible checks of the published tables, examples and structural
//! results, run by `skewdna verify-paper` and the acceptance tests.
//!
//! Every check recomputes its claim from the library and compares it
//! against literal expected data or a brute-force sweep. Each check reports
//! whether it passed plus a few lines of detail (counts, the first
//! counterexamples found, timing).

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::analysis::{self, Metric};
use crate::code::{self, CodeSet, LeadingMode, SkewCyclicCode, DEFAULT_BUDGET, DEFAULT_CAP};
use crate::dna::{self, DnaWord};
use crate::error::Result;
use crate::gf4::Gf4;
use crate::poly::SkewPoly;
use crate::ring::RElem;
use crate::word::{self, Codeword};

/// Default seed for the randomized checks.
pub const DEFAULT_SEED: u64 = 0x5eed_f4d4;
/// Default number of random samples per length.
pub const DEFAULT_SAMPLES: usize = 10_000;
/// How many counterexamples a check lists before summarizing.
const SHOWN: usize = 4;

/// One row of the element / Gray image / DNA table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub element: String,
    pub gray: (String, String),
    pub bases: String,
}

const TABLE1: [(&str, &str, &str, &str); 16] = [
    ("0", "0", "0", "AA"),
    ("1", "1", "1", "TT"),
    ("w", "w", "w", "CC"),
    ("w2", "w2", "w2", "GG"),
    ("v", "1", "0", "TA"),
    ("1+v", "0", "1", "AT"),
    ("w+v", "w2", "w", "GC"),
    ("w2+v", "w", "w2", "CG"),
    ("w*v", "w", "0", "CA"),
    ("1+w*v", "w2", "1", "GT"),
    ("w+w*v", "0", "w", "AC"),
    ("w2+w*v", "1", "w2", "TG"),
    ("w2*v", "w2", "0", "GA"),
    ("1+w2*v", "w", "1", "CT"),
    ("w+w2*v", "1", "w", "TC"),
    ("w2+w2*v", "0", "w2", "AG"),
];

/// The published correspondence between ring elements and DNA pairs.
pub fn published_table1() -> Vec<TableRow> {
    TABLE1
        .iter()
        .map(|&(e, g0, g1, b)| TableRow {
            element: e.to_string(),
            gray: (g0.to_string(), g1.to_string()),
            bases: b.to_string(),
        })
        .collect()
}

/// The sixteen published DNA codewords of `<v(x^4+x^2+1)>` at length 6.
pub const TABLE2: [&str; 16] = [
    "AAAAAAAAAAAA",
    "TAATTAATTAAT",
    "CAACCAACCAAC",
    "GAAGGAAGGAAG",
    "TAAATAAATAAA",
    "AAATAAATAAAT",
    "CAAACAAACAAA",
    "AAACAAACAAAC",
    "GAAAGAAAGAAA",
    "AAAGAAAGAAAG",
    "CAATCAATCAAT",
    "TAACTAACTAAC",
    "GAATGAATGAAT",
    "TAAGTAAGTAAG",
    "GAACGAACGAAC",
    "CAAGCAAGCAAG",
];

/// Inputs of a suite run. The expected tables are data so that tests can
/// feed corrupted copies and watch the matching check fail.
#[derive(Clone, Debug)]
pub struct Config {
    pub seed: u64,
    pub samples: usize,
    pub cap: u64,
    pub table1: Vec<TableRow>,
    pub table2: Vec<String>,
}

impl Default for Config {
    fn default() -> Config {
        Config {
            seed: DEFAULT_SEED,
            samples: DEFAULT_SAMPLES,
            cap: DEFAULT_CAP,
            table1: published_table1(),
            table2: TABLE2.iter().map(|s| s.to_string()).collect(),
        }
    }
}

/// Result of one check.
#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub id: usize,
    pub name: &'static str,
    pub claim: &'static str,
    pub passed: bool,
    pub details: Vec<String>,
    pub elapsed_ms: u128,
    pub budget_ms: u128,
}

impl CheckReport {
    pub fn within_budget(&self) -> bool {
        self.elapsed_ms <= self.budget_ms
    }

    /// `PASS [3] name (12 ms)` style summary line.
    pub fn summary_line(&self) -> String {
        format!(
            "{} [{:>2}] {} ({} ms): {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.elapsed_ms,
            self.claim
        )
    }
}

struct CheckDef {
    name: &'static str,
    claim: &'static str,
    budget: Duration,
    run: fn(&Config, &mut Vec<String>) -> Result<bool>,
}

const fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

static CHECKS: [CheckDef; 12] = [
    CheckDef {
        name: "gray-dna-table",
        claim: "all 16 (element, Gray image, DNA pair) rows match the published table",
        budget: secs(1),
        run: check_table1,
    },
    CheckDef {
        name: "unit-inverse",
        claim: "(a^-1 + b^2 v)(a + bv) = 1 for every unit a + bv",
        budget: secs(1),
        run: check_unit_inverse,
    },
    CheckDef {
        name: "length-10-palindromic-divisor",
        claim: "x^4 + (v+w)x^2 + 1 right-divides x^10 - 1, is palindromic, and its code is reversible (remainder membership)",
        budget: secs(10),
        run: check_length10,
    },
    CheckDef {
        name: "length-12-theta-palindromic-divisor",
        claim: "x^3 + (v+w2)x^2 + (v+w)x + 1 right-divides x^12 - 1 and is theta-palindromic",
        budget: secs(10),
        run: check_length12,
    },
    CheckDef {
        name: "length-6-dna-code",
        claim: "<v(x^4+x^2+1)> at n = 6 encodes to the 16 published strings, is reversible, min Lee distance 3",
        budget: secs(5),
        run: check_table2,
    },
    CheckDef {
        name: "even-degree-reversibility",
        claim: "n in {2,4,6}, even-degree divisors (unit, v, 1+v): reversible iff palindromic",
        budget: secs(120),
        run: check_even_degree,
    },
    CheckDef {
        name: "odd-degree-reversibility",
        claim: "n in {4,6}, odd-degree unit divisors: reversible iff a0*g is theta-palindromic",
        budget: secs(60),
        run: check_odd_degree,
    },
    CheckDef {
        name: "odd-length-and-non-unit-impossibility",
        claim: "n in {3,5}: codes are cyclic; v / 1+v codes at odd n or odd degree are never reversible",
        budget: secs(60),
        run: check_odd_length,
    },
    CheckDef {
        name: "reverse-complement-and-complement",
        claim: "reverse-complement iff reversible and all-ones present; v / 1+v codes are never complement-closed",
        budget: secs(60),
        run: check_complement,
    },
    CheckDef {
        name: "gray-quasi-cyclic-identity",
        claim: "pair_swap(tau2(gray(c))) = gray(sigma_theta(c)) for all words",
        budget: secs(30),
        run: check_quasi_cyclic,
    },
    CheckDef {
        name: "gray-distance-preservation",
        claim: "Lee distance equals Hamming distance of Gray images",
        budget: secs(30),
        run: check_distance,
    },
    CheckDef {
        name: "minimal-non-unit-form",
        claim: "minimal-degree non-unit-leading words are v*g1 or (1+v)*g1 with g1 over F4",
        budget: secs(60),
        run: check_minimal_form,
    },
];

pub const CHECK_COUNT: usize = 12;

/// `(id, name, claim)` of every check.
pub fn catalogue() -> Vec<(usize, &'static str, &'static str)> {
    CHECKS.iter().enumerate().map(|(i, s)| (i + 1, s.name, s.claim)).collect()
}

/// Runs check `id` (1-based). Library errors count as failures.
pub fn run_check(id: usize, cfg: &Config) -> CheckReport {
    let def = &CHECKS[id - 1];
    let mut details = Vec::new();
    let start = Instant::now();
    let passed = match (def.run)(cfg, &mut details) {
        Ok(p) => p,
        Err(e) => {
            details.push(format!("error: {e}"));
            false
        }
    };
    CheckReport {
        id,
        name: def.name,
        claim: def.claim,
        passed,
        details,
        elapsed_ms: start.elapsed().as_millis(),
        budget_ms: def.budget.as_millis(),
    }
}

pub fn run_all(cfg: &Config) -> Vec<CheckReport> {
    (1..=CHECK_COUNT).map(|id| run_check(id, cfg)).collect()
}

fn poly(s: &str) -> SkewPoly {
    crate::parse::parse_poly(s).expect("built-in polynomial literal")
}

/// Records a failure line, keeping only the first few.
fn note(details: &mut Vec<String>, failures: &mut usize, line: String) {
    if *failures < SHOWN {
        details.push(line);
    }
    *failures += 1;
}

fn finish(details: &mut Vec<String>, failures: usize, total: usize, what: &str) -> bool {
    if failures > SHOWN {
        details.push(format!("... {} more", failures - SHOWN));
    }
    details.push(format!("{what}: {} of {total} hold", total - failures));
    failures == 0
}

fn check_table1(cfg: &Config, details: &mut Vec<String>) -> Result<bool> {
    let mut failures = 0;
    let mut seen = Vec::new();
    for row in &cfg.table1 {
        let x: RElem = row.element.parse()?;
        seen.push(x);
        let g0: Gf4 = row.gray.0.parse()?;
        let g1: Gf4 = row.gray.1.parse()?;
        let [b0, b1] = dna::encode_element(x);
        let bases = format!("{}{}", b0.as_char(), b1.as_char());
        if x.gray() != (g0, g1) {
            let (c0, c1) = x.gray();
            note(details, &mut failures, format!("{}: Gray image ({c0}, {c1}), expected ({g0}, {g1})", row.element));
        } else if bases != row.bases {
            note(details, &mut failures, format!("{}: DNA pair {bases}, expected {}", row.element, row.bases));
        } else {
            let back = dna::decode_dna(&row.bases.parse::<DnaWord>()?)?;
            if back.entries() != [x] {
                note(details, &mut failures, format!("{}: {} decodes to {back}", row.element, row.bases));
            }
        }
    }
    seen.sort();
    seen.dedup();
    if seen.len() != 16 {
        note(details, &mut failures, format!("table covers {} distinct elements, expected 16", seen.len()));
    }
    Ok(finish(details, failures, cfg.table1.len(), "rows"))
}

fn check_unit_inverse(_: &Config, details: &mut Vec<String>) -> Result<bool> {
    let mut failures = 0;
    let units: Vec<RElem> = RElem::all().filter(|x| x.is_unit()).collect();
    if units.len() != 9 {
        note(details, &mut failures, format!("found {} units, expected 9", units.len()));
    }
    for &x in &units {
        let formula = RElem::new(x.a.inv()?, x.b.square());
        if formula * x != RElem::ONE {
            note(details, &mut failures, format!("{x}: formula gives {formula}, product {}", formula * x));
        }
    }
    // Nothing else is invertible.
    for x in RElem::all().filter(|x| !x.is_unit()) {
        if RElem::all().any(|y| x * y == RElem::ONE) {
            note(details, &mut failures, format!("{x} is invertible but not flagged as a unit"));
        }
    }
    Ok(finish(details, failures, 16, "elements"))
}

/// Checks reversibility through remainder membership only, using that
/// c -> theta(c)^r is additive and theta-semilinear, so the images of an
/// R-spanning set decide it.
fn reversible_by_remainder(code: &SkewCyclicCode, g: &SkewPoly, details: &mut Vec<String>) -> Result<bool> {
    let n = code.n();
    let t = g.degree().unwrap_or(0);
    let mut ok = true;
    for i in 0..n - t {
        let shifted = (&SkewPoly::monomial(RElem::ONE, i) * g).reduce_mod_xn1(n);
        let c = Codeword::from_poly(&shifted, n)?;
        let image = dna::r_level_reverse(&c);
        match code.contains_by_remainder(&image)? {
            Some(true) => {}
            Some(false) => {
                details.push(format!("reverse of x^{i} g = {image} has nonzero remainder"));
                ok = false;
            }
            None => {
                details.push("generator is not a unit-leading divisor".into());
                return Ok(false);
            }
        }
    }
    Ok(ok)
}

fn check_length10(_: &Config, details: &mut Vec<String>) -> Result<bool> {
    let (n, g) = (10, poly("x^4 + (v+w)*x^2 + 1"));
    let divides = g.right_divides(&SkewPoly::x_n_minus_one(n))?;
    let palindromic = g.is_palindromic()?;
    let code = SkewCyclicCode::single(n, g.clone())?;
    let dim_ok = code.dimension() == 4 * 6;
    let rev = reversible_by_remainder(&code, &g, details)?;
    let basis = dna::is_reversible_by_basis(&code);
    details.push(format!(
        "right divisor {divides}, palindromic {palindromic}, |C| = 2^{} (expected 16^6), reversible by remainder {rev}, by basis {basis}",
        code.dimension()
    ));
    Ok(divides && palindromic && dim_ok && rev && basis)
}

fn check_length12(_: &Config, details: &mut Vec<String>) -> Result<bool> {
    let (n, g) = (12, poly("x^3 + (v+w2)*x^2 + (v+w)*x + 1"));
    let divides = g.right_divides(&SkewPoly::x_n_minus_one(n))?;
    let (_, rem) = SkewPoly::x_n_minus_one(n).right_divmod(&g)?;
    let theta_pal = g.is_theta_palindromic()?;
    let code = SkewCyclicCode::single(n, g.clone())?;
    let rev = reversible_by_remainder(&code, &g, details)?;
    details.push(format!(
        "remainder of x^12 - 1 is {rem}, theta-palindromic {theta_pal}, code reversible {rev}"
    ));
    Ok(divides && theta_pal && rev)
}

fn check_table2(cfg: &Config, details: &mut Vec<String>) -> Result<bool> {
    let code = SkewCyclicCode::single(6, poly("v*(x^4 + x^2 + 1)"))?;
    let set = code.materialize(cfg.cap)?;
    let mut got: Vec<String> = set.iter().map(|c| dna::encode_word(&c).to_string()).collect();
    let mut want = cfg.table2.clone();
    got.sort();
    want.sort();
    want.dedup();
    let equal = got == want;
    if !equal {
        for s in got.iter().filter(|s| !want.contains(s)).take(SHOWN) {
            details.push(format!("computed but not published: {s}"));
        }
        for s in want.iter().filter(|s| !got.contains(s)).take(SHOWN) {
            details.push(format!("published but not computed: {s}"));
        }
    }
    let rev = dna::is_reversible_dna(&set);
    let lee = analysis::min_distance(&set, Metric::Lee)?;
    let lee_pairwise = analysis::min_pairwise_distance(&set, Metric::Lee)?;
    details.push(format!(
        "{} words, set equality {equal}, reversible {rev}, min Lee distance {lee} (pairwise {lee_pairwise})",
        set.len()
    ));
    Ok(set.len() == 16 && equal && rev && lee == 3 && lee_pairwise == 3)
}

/// A divisor from a sweep with its materialized code.
struct SweepCode {
    n: usize,
    t: usize,
    g: SkewPoly,
    code: SkewCyclicCode,
    set: CodeSet,
}

impl SweepCode {
    fn label(&self) -> String {
        format!("n={} t={} g={}", self.n, self.t, self.g.to_human())
    }
}

fn sweep(
    ns: &[usize],
    degree: impl Fn(usize, usize) -> bool,
    modes: &[LeadingMode],
    cap: u64,
) -> Result<Vec<SweepCode>> {
    let mut out = Vec::new();
    for &n in ns {
        for t in (1..n).filter(|&t| degree(n, t)) {
            for &mode in modes {
                for g in code::enumerate_right_divisors(n, t, mode, DEFAULT_BUDGET)? {
                    let code = SkewCyclicCode::single(n, g.clone())?;
                    let set = code.materialize(cap)?;
                    out.push(SweepCode { n, t, g, code, set });
                }
            }
        }
    }
    Ok(out)
}

fn even_degree_sweep(cap: u64) -> Result<Vec<SweepCode>> {
    sweep(&[2, 4, 6], |_, t| t % 2 == 0, &LeadingMode::ALL, cap)
}

fn odd_degree_sweep(cap: u64) -> Result<Vec<SweepCode>> {
    sweep(&[4, 6], |_, t| t % 2 == 1, &[LeadingMode::Unit], cap)
}

/// For a v / 1+v generator the palindromic test applies to g1.
fn f4_part(g: &SkewPoly) -> SkewPoly {
    match g.leading() {
        Some(l) if !l.is_unit() => SkewPoly::new(
            g.coeffs().iter().map(|c| if c.a.is_zero() { RElem::scalar(c.b) } else { RElem::scalar(c.a) }).collect(),
        ),
        _ => g.clone(),
    }
}

fn check_even_degree(cfg: &Config, details: &mut Vec<String>) -> Result<bool> {
    let codes = even_degree_sweep(cfg.cap)?;
    let mut failures = 0;
    let mut reversible = 0;
    for sc in &codes {
        let rev = dna::is_reversible_dna(&sc.set);
        let pal = f4_part(&sc.g).is_palindromic()?;
        reversible += rev as usize;
        if rev != pal {
            note(details, &mut failures, format!("{}: reversible {rev}, palindromic {pal}", sc.label()));
        }
    }
    details.push(format!("{reversible} of {} codes reversible", codes.len()));
    Ok(finish(details, failures, codes.len(), "equivalences"))
}

fn check_odd_degree(cfg: &Config, details: &mut Vec<String>) -> Result<bool> {
    let codes = odd_degree_sweep(cfg.cap)?;
    let mut failures = 0;
    let mut reversible = 0;
    let mut associate_disagrees = 0;
    for sc in &codes {
        let rev = dna::is_reversible_dna(&sc.set);
        let a0 = sc.g.coeff(0);
        let a0g = sc.g.scale_left(a0).is_theta_palindromic()?;
        let any = dna::theta_palindromic_associate(&sc.g).is_some();
        reversible += rev as usize;
        associate_disagrees += (any != a0g) as usize;
        if rev != a0g {
            note(details, &mut failures, format!("{}: reversible {rev}, a0*g theta-palindromic {a0g}", sc.label()));
        }
    }
    details.push(format!(
        "{reversible} of {} codes reversible; a0*g test and any-unit-multiple test disagree on {associate_disagrees}",
        codes.len()
    ));
    Ok(finish(details, failures, codes.len(), "equivalences"))
}

fn cyclic_closed(code: &SkewCyclicCode) -> bool {
    let span = code.span();
    span.basis().all(|w| span.contains(word::rotate_packed(w, code.n())))
}

fn random_poly(rng: &mut ChaCha8Rng, n: usize) -> SkewPoly {
    loop {
        let deg = rng.gen_range(0..n);
        let p = SkewPoly::new((0..=deg).map(|_| RElem::from_index(rng.gen_range(0..16))).collect());
        if !p.is_zero() {
            return p;
        }
    }
}

fn check_odd_length(cfg: &Config, details: &mut Vec<String>) -> Result<bool> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);

    // Every code is closed under the plain cyclic shift: all divisor codes
    // exhaustively over their words, plus seeded random one- and
    // two-generator codes through their bases.
    let divisor_codes = sweep(&[3, 5], |_, _| true, &LeadingMode::ALL, cfg.cap)?;
    let mut cyclic_failures = 0;
    for sc in &divisor_codes {
        let closed = sc.set.iter().all(|c| sc.set.contains(&c.cyclic_shift()).unwrap_or(false));
        if !closed {
            note(details, &mut cyclic_failures, format!("{}: not cyclic", sc.label()));
        }
    }
    let mut random = 0;
    for n in [3, 5] {
        for k in 0..200 {
            let gens = (0..1 + k % 2).map(|_| random_poly(&mut rng, n)).collect();
            let code = SkewCyclicCode::new(n, gens)?;
            random += 1;
            if !cyclic_closed(&code) {
                note(details, &mut cyclic_failures, format!("n={n}: random code {:?} not cyclic", code.generators()));
            }
        }
    }
    let cyclic_ok = finish(details, cyclic_failures, divisor_codes.len() + random, "cyclic closures");

    // Reversible unit-leading codes at odd n have a palindromic F4 generator.
    let mut pal_failures = 0;
    let mut pal_total = 0;
    for sc in divisor_codes.iter().filter(|sc| sc.g.leading().is_some_and(RElem::is_unit)) {
        if !dna::is_reversible_dna(&sc.set) {
            continue;
        }
        pal_total += 1;
        let found = palindromic_f4_generator(sc)?;
        if !found {
            note(details, &mut pal_failures, format!("{}: reversible without palindromic F4 generator", sc.label()));
        }
    }
    let pal_ok = finish(details, pal_failures, pal_total, "reversible odd-length unit codes with palindromic F4 generator");

    // The impossibility statement, as stated: no v / 1+v code of odd length,
    // or of even length and odd degree, is reversible.
    let mut targets = sweep(&[3, 5], |_, _| true, &[LeadingMode::V, LeadingMode::V1], cfg.cap)?;
    targets.extend(sweep(
        &[4, 6],
        |n, t| matches!((n, t), (4, 1) | (4, 3) | (6, 1) | (6, 3) | (6, 5)),
        &[LeadingMode::V, LeadingMode::V1],
        cfg.cap,
    )?);
    let mut rev_failures = 0;
    let mut genuine = 0;
    let mut genuine_reversible = 0;
    for sc in &targets {
        let rev = dna::is_reversible_dna(&sc.set);
        let unit_word = sc.code.span().has_unit_leading_word();
        if !unit_word {
            genuine += 1;
            genuine_reversible += rev as usize;
        }
        if rev {
            let why = if unit_word {
                if sc.n % 2 == 1 && sc.code.span() == SkewCyclicCode::single(sc.n, f4_part(&sc.g))?.span() {
                    "code equals <g1>"
                } else {
                    "code contains unit-leading words"
                }
            } else {
                "no unit-leading words"
            };
            note(details, &mut rev_failures, format!("{}: reversible ({why})", sc.label()));
        }
    }
    let rev_ok = finish(details, rev_failures, targets.len(), "non-reversible v / 1+v codes");
    details.push(format!(
        "among the {genuine} codes with no unit-leading word, {genuine_reversible} are reversible"
    ));
    Ok(cyclic_ok && pal_ok && rev_ok)
}

/// Searches the code's minimal-degree monic words for one that is
/// palindromic with coefficients in F4.
fn palindromic_f4_generator(sc: &SweepCode) -> Result<bool> {
    let t = sc.g.degree().unwrap_or(0);
    for c in sc.set.iter() {
        let p = c.to_poly();
        if p.degree() == Some(t) && p.leading() == Some(RElem::ONE) && p.is_over_f4() && p.is_palindromic()? {
            // A monic word of minimal degree generates the whole code.
            if SkewCyclicCode::single(sc.n, p)?.span() == sc.code.span() {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

fn check_complement(cfg: &Config, details: &mut Vec<String>) -> Result<bool> {
    let mut codes = even_degree_sweep(cfg.cap)?;
    codes.extend(odd_degree_sweep(cfg.cap)?);
    let mut rc_failures = 0;
    let mut rc_count = 0;
    for sc in &codes {
        let rev = dna::is_reversible_dna(&sc.set);
        let ones = sc.set.all_ones_in();
        let rc = dna::is_reverse_complement_dna(&sc.set);
        rc_count += rc as usize;
        if rc != (rev && ones) {
            note(details, &mut rc_failures, format!("{}: rc {rc}, reversible {rev}, all-ones {ones}", sc.label()));
        }
    }
    details.push(format!("{rc_count} of {} codes reverse-complement", codes.len()));
    let rc_ok = finish(details, rc_failures, codes.len(), "reverse-complement equivalences");

    let mut comp_failures = 0;
    let mut non_unit = 0;
    let mut genuine = 0;
    let mut genuine_closed = 0;
    for sc in codes.iter().filter(|sc| sc.g.leading().is_some_and(|l| !l.is_unit())) {
        non_unit += 1;
        let closed = dna::is_complement_closed(&sc.set);
        if !sc.code.span().has_unit_leading_word() {
            genuine += 1;
            genuine_closed += closed as usize;
        }
        if closed {
            note(details, &mut comp_failures, format!("{}: complement-closed (code contains unit-leading words)", sc.label()));
        }
    }
    let comp_ok = finish(details, comp_failures, non_unit, "non-complement v / 1+v codes");
    details.push(format!(
        "among the {genuine} v / 1+v codes with no unit-leading word, {genuine_closed} are complement-closed"
    ));
    Ok(rc_ok && comp_ok)
}

fn all_words(n: usize) -> impl Iterator<Item = Codeword> {
    (0..16u64.pow(n as u32)).map(move |i| Codeword::unpack(i, n))
}

fn random_word(rng: &mut ChaCha8Rng, n: usize) -> Codeword {
    Codeword::new((0..n).map(|_| RElem::from_index(rng.gen_range(0..16))).collect())
}

fn check_quasi_cyclic(cfg: &Config, details: &mut Vec<String>) -> Result<bool> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x10);
    let mut failures = 0;
    let mut total = 0;
    let mut test = |c: &Codeword, failures: &mut usize| {
        total += 1;
        if !analysis::quasi_cyclic_identity_holds(c) {
            note(details, failures, format!("identity fails on {c}"));
        }
    };
    for n in 1..=2 {
        for c in all_words(n) {
            test(&c, &mut failures);
        }
    }
    for n in 3..=6 {
        for _ in 0..cfg.samples {
            test(&random_word(&mut rng, n), &mut failures);
        }
    }
    let identity_ok = finish(details, failures, total, "words");

    let set = SkewCyclicCode::single(6, poly("v*(x^4 + x^2 + 1)"))?.materialize(cfg.cap)?;
    let closed = analysis::verify_quasi_cyclic_equivalence(&set) && analysis::gray_image_closed_under_swap_shift(&set);
    details.push(format!("Gray image of <v(x^4+x^2+1)> closed under pair_swap o tau2: {closed}"));
    Ok(identity_ok && closed)
}

fn check_distance(cfg: &Config, details: &mut Vec<String>) -> Result<bool> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x11);
    let mut pairs: Vec<(Codeword, Codeword)> = Vec::new();
    for a in RElem::all() {
        for b in RElem::all() {
            pairs.push((Codeword::new(vec![a]), Codeword::new(vec![b])));
        }
    }
    let element_ok = analysis::verify_distance_preservation(&pairs)?;
    let weights_ok = RElem::all().all(|x| {
        let w = analysis::lee_weight(x);
        w <= 2 && (w == 0) == x.is_zero()
    });
    details.push(format!("256 element pairs: {element_ok}; Lee weights in {{0,1,2}}, zero only at 0: {weights_ok}"));
    let mut ok = element_ok && weights_ok;
    for n in 1..=6 {
        let pairs: Vec<(Codeword, Codeword)> =
            (0..cfg.samples).map(|_| (random_word(&mut rng, n), random_word(&mut rng, n))).collect();
        let good = analysis::verify_distance_preservation(&pairs)?;
        if !good {
            details.push(format!("n={n}: mismatch among {} random pairs", pairs.len()));
        }
        ok &= good;
    }
    details.push(format!("{} random pairs per length 1..=6", cfg.samples));
    Ok(ok)
}

fn check_minimal_form(cfg: &Config, details: &mut Vec<String>) -> Result<bool> {
    let codes = sweep(&[2, 3, 4, 5, 6], |_, _| true, &LeadingMode::ALL, cfg.cap)?;
    let mut failures = 0;
    let mut scanned = 0;
    for sc in &codes {
        let report = code::minimal_degree_scan(&sc.set);
        if report.min_degree.is_none() {
            continue;
        }
        scanned += 1;
        if !report.all_split() {
            let bad = report
                .polys
                .iter()
                .find(|p| !p.coeffs().iter().all(|c| c.a.is_zero()) && !p.coeffs().iter().all(|c| c.a == c.b));
            note(
                details,
                &mut failures,
                format!("{}: minimal non-unit word {} is not v*g1 or (1+v)*g1", sc.label(), bad.map(|p| p.to_human()).unwrap_or_default()),
            );
        }
    }
    details.push(format!("{} codes constructed, {scanned} have non-unit-leading words", codes.len()));
    Ok(finish(details, failures, scanned, "minimal-degree scans"))
}
