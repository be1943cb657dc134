//! Theta-skew cyclic codes: left submodules of R[x, theta] / (x^n - 1).
//!
//! A code is carried as an F2 basis of its packed words. The basis is grown
//! from the generators by closing under left multiplication by `w`, `v`,
//! `w*v` and under the skew shift (left multiplication by `x`), which yields
//! the full left submodule since those maps are F2-linear. Materializing the
//! word set is a separate, capped step.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf4::Gf4;
use crate::poly::SkewPoly;
use crate::ring::RElem;
use crate::word::{self, Codeword, MAX_LEN};

/// Default cap on materialized code size.
pub const DEFAULT_CAP: u64 = 1 << 24;
/// Default cap on candidates examined by divisor enumeration.
pub const DEFAULT_BUDGET: u64 = 1 << 24;

/// F2 basis in echelon form, keyed by the highest set bit of each vector.
#[derive(Clone)]
pub struct F2Span {
    n: usize,
    pivots: [u64; 64],
    dim: u32,
}

impl F2Span {
    pub fn new(n: usize) -> F2Span {
        F2Span { n, pivots: [0; 64], dim: 0 }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dimension(&self) -> u32 {
        self.dim
    }

    fn reduce(&self, mut w: u64) -> u64 {
        while w != 0 {
            let top = 63 - w.leading_zeros() as usize;
            let p = self.pivots[top];
            if p == 0 {
                break;
            }
            w ^= p;
        }
        w
    }

    /// Adds `w` to the span; returns false if it was already inside.
    pub fn insert(&mut self, w: u64) -> bool {
        let r = self.reduce(w);
        if r == 0 {
            return false;
        }
        self.pivots[63 - r.leading_zeros() as usize] = r;
        self.dim += 1;
        true
    }

    pub fn contains(&self, w: u64) -> bool {
        self.reduce(w) == 0
    }

    /// Basis vectors in increasing pivot order.
    pub fn basis(&self) -> impl Iterator<Item = u64> + '_ {
        self.pivots.iter().copied().filter(|&p| p != 0)
    }

    /// True when some word has a unit as its leading (highest nonzero)
    /// entry.
    ///
    /// Words supported on entries `0..=d` are spanned by the basis vectors
    /// with pivot in those entries, so the leading coefficients realized at
    /// degree `d` span the ideal generated by the pivot nibbles at `d`. That
    /// ideal contains a unit only when it is all of R (F2-dimension 4).
    pub fn has_unit_leading_word(&self) -> bool {
        (0..self.n).any(|d| (4 * d..4 * d + 4).all(|bit| self.pivots[bit] != 0))
    }

    /// Every word, in no particular order.
    pub fn enumerate(&self, cap: u64) -> Result<Vec<u64>> {
        let size = 1u128 << self.dim;
        if size > u128::from(cap) {
            return Err(Error::CapExceeded { dimension: self.dim, cap });
        }
        let basis: Vec<u64> = self.basis().collect();
        let mut out = Vec::with_capacity(size as usize);
        let mut w = 0u64;
        out.push(w);
        for i in 1..size as u64 {
            w ^= basis[i.trailing_zeros() as usize];
            out.push(w);
        }
        Ok(out)
    }
}

/// Equality of the spanned spaces, not of the particular bases.
impl PartialEq for F2Span {
    fn eq(&self, other: &F2Span) -> bool {
        self.n == other.n && self.dim == other.dim && self.basis().all(|b| other.contains(b))
    }
}

impl Eq for F2Span {}

impl fmt::Debug for F2Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F2Span(n={}, dim={})", self.n, self.dim)
    }
}

/// How a single generator relates to the structure theorem.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "form", rename_all = "kebab-case")]
pub enum GeneratorForm {
    /// Unit leading coefficient and right-divides `x^n - 1`.
    UnitDivisor,
    /// `v * g1` with `g1` monic over F4 dividing `x^n - 1`.
    VType { g1: SkewPoly },
    /// `(1+v) * g1` with `g1` monic over F4 dividing `x^n - 1`.
    V1Type { g1: SkewPoly },
    /// None of the above.
    Generic,
}

impl GeneratorForm {
    pub fn label(&self) -> &'static str {
        match self {
            GeneratorForm::UnitDivisor => "unit-monic",
            GeneratorForm::VType { .. } => "v-type",
            GeneratorForm::V1Type { .. } => "v1-type",
            GeneratorForm::Generic => "other",
        }
    }

    /// Classifies `g` as a generator of a length-`n` code.
    pub fn of(g: &SkewPoly, n: usize) -> Result<GeneratorForm> {
        let lead = g.leading().ok_or(Error::ZeroPolynomial)?;
        let xn1 = SkewPoly::x_n_minus_one(n);
        if lead.is_unit() {
            return Ok(if g.right_divides(&xn1)? {
                GeneratorForm::UnitDivisor
            } else {
                GeneratorForm::Generic
            });
        }
        // v*c = c*v and (1+v)*c = c + c*v for c in F4.
        let v_part = g.coeffs().iter().all(|c| c.a.is_zero());
        let v1_part = g.coeffs().iter().all(|c| c.a == c.b);
        let g1 = match (v_part, v1_part) {
            (true, _) => f4_part(g, |c| c.b),
            (_, true) => f4_part(g, |c| c.a),
            _ => return Ok(GeneratorForm::Generic),
        };
        // theta fixes F4, so right division here is ordinary division in F4[x].
        if !g1.right_divides(&xn1)? {
            return Ok(GeneratorForm::Generic);
        }
        Ok(if v_part {
            GeneratorForm::VType { g1 }
        } else {
            GeneratorForm::V1Type { g1 }
        })
    }
}

/// Monic F4 polynomial read off `g` coordinate-wise.
fn f4_part(g: &SkewPoly, pick: impl Fn(RElem) -> Gf4) -> SkewPoly {
    let raw: Vec<Gf4> = g.coeffs().iter().map(|&c| pick(c)).collect();
    let lead_inv = raw.last().copied().unwrap_or(Gf4::ONE).inv().unwrap_or(Gf4::ONE);
    SkewPoly::from_f4(&raw.iter().map(|&c| c * lead_inv).collect::<Vec<_>>())
}

/// A theta-skew cyclic code of length `n` given by its generators.
#[derive(Clone, Debug)]
pub struct SkewCyclicCode {
    n: usize,
    generators: Vec<SkewPoly>,
    forms: Vec<GeneratorForm>,
    span: F2Span,
}

impl SkewCyclicCode {
    /// Left submodule generated by `gens`, each of degree below `n`.
    pub fn new(n: usize, gens: Vec<SkewPoly>) -> Result<SkewCyclicCode> {
        if n == 0 || n > MAX_LEN {
            return Err(Error::UnsupportedLength { n, max: MAX_LEN });
        }
        if gens.is_empty() {
            return Err(Error::NoGenerators);
        }
        let mut forms = Vec::with_capacity(gens.len());
        let mut seeds = Vec::with_capacity(gens.len());
        for g in &gens {
            let d = g.degree().ok_or(Error::ZeroPolynomial)?;
            if d >= n {
                return Err(Error::DegreeTooLarge { degree: d, n });
            }
            forms.push(GeneratorForm::of(g, n)?);
            seeds.push(word::pack(g.coeffs()));
        }
        let span = close_span(n, seeds);
        Ok(SkewCyclicCode { n, generators: gens, forms, span })
    }

    pub fn single(n: usize, g: SkewPoly) -> Result<SkewCyclicCode> {
        SkewCyclicCode::new(n, vec![g])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[SkewPoly] {
        &self.generators
    }

    pub fn forms(&self) -> &[GeneratorForm] {
        &self.forms
    }

    pub fn span(&self) -> &F2Span {
        &self.span
    }

    /// `log2 |C|`.
    pub fn dimension(&self) -> u32 {
        self.span.dimension()
    }

    pub fn size(&self) -> u128 {
        1u128 << self.span.dimension()
    }

    /// Membership via the F2 basis.
    pub fn contains(&self, c: &Codeword) -> Result<bool> {
        c.check_len(self.n)?;
        Ok(self.span.contains(c.pack()?))
    }

    /// For a single unit-leading right divisor `g` of `x^n - 1`,
    /// `c` is a codeword iff `g` right-divides `c(x)`. `None` when the code
    /// is not of that shape.
    pub fn contains_by_remainder(&self, c: &Codeword) -> Result<Option<bool>> {
        c.check_len(self.n)?;
        match (self.generators.as_slice(), self.forms.as_slice()) {
            ([g], [GeneratorForm::UnitDivisor]) => Ok(Some(g.right_divides(&c.to_poly())?)),
            _ => Ok(None),
        }
    }

    pub fn materialize(&self, cap: u64) -> Result<CodeSet> {
        let mut words = self.span.enumerate(cap)?;
        let n = self.n;
        words.sort_by_key(|&w| word::reverse_packed(w, n));
        let lookup = words.iter().copied().collect();
        Ok(CodeSet { n, words, lookup })
    }

    pub fn contains_all_ones(&self) -> bool {
        self.span.contains(word::all_ones_packed(self.n))
    }
}

fn close_span(n: usize, seeds: Vec<u64>) -> F2Span {
    let scalars = [RElem::scalar(Gf4::W), RElem::V, RElem::new(Gf4::ZERO, Gf4::W)];
    let mut span = F2Span::new(n);
    let mut queue: VecDeque<u64> = seeds.into();
    while let Some(w) = queue.pop_front() {
        if !span.insert(w) {
            continue;
        }
        for &s in &scalars {
            queue.push_back(word::scale_packed(w, n, s));
        }
        queue.push_back(word::sigma_theta_packed(w, n));
    }
    span
}

/// A materialized code: every word, sorted lexicographically by entries.
#[derive(Clone)]
pub struct CodeSet {
    n: usize,
    words: Vec<u64>,
    lookup: HashSet<u64>,
}

impl CodeSet {
    /// Builds a set from explicit words (not necessarily a code).
    pub fn from_words(n: usize, words: &[Codeword]) -> Result<CodeSet> {
        if n == 0 || n > MAX_LEN {
            return Err(Error::UnsupportedLength { n, max: MAX_LEN });
        }
        let mut packed = Vec::with_capacity(words.len());
        for w in words {
            w.check_len(n)?;
            packed.push(w.pack()?);
        }
        packed.sort_by_key(|&w| word::reverse_packed(w, n));
        packed.dedup();
        let lookup = packed.iter().copied().collect();
        Ok(CodeSet { n, words: packed, lookup })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Codeword> + '_ {
        self.words.iter().map(move |&w| Codeword::unpack(w, self.n))
    }

    pub(crate) fn packed(&self) -> &[u64] {
        &self.words
    }

    pub(crate) fn contains_packed(&self, w: u64) -> bool {
        self.lookup.contains(&w)
    }

    pub fn contains(&self, c: &Codeword) -> Result<bool> {
        c.check_len(self.n)?;
        Ok(self.lookup.contains(&c.pack()?))
    }

    pub fn all_ones_in(&self) -> bool {
        self.contains_packed(word::all_ones_packed(self.n))
    }

    /// One word per line, comma-separated element tokens.
    pub fn export(&self) -> String {
        self.iter().map(|c| format!("{c}\n")).collect()
    }
}

impl fmt::Debug for CodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CodeSet(n={}, |C|={})", self.n, self.words.len())
    }
}

/// Which generator shape to search for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LeadingMode {
    /// Monic over R.
    Unit,
    /// `v * g1`, `g1` monic over F4.
    V,
    /// `(1+v) * g1`, `g1` monic over F4.
    V1,
}

impl LeadingMode {
    pub const ALL: [LeadingMode; 3] = [LeadingMode::Unit, LeadingMode::V, LeadingMode::V1];
}

/// All degree-`t` right divisors of `x^n - 1` of the requested shape, sorted
/// by ascending coefficient list.
pub fn enumerate_right_divisors(
    n: usize,
    t: usize,
    mode: LeadingMode,
    budget: u64,
) -> Result<Vec<SkewPoly>> {
    if t == 0 || t >= n {
        return Err(Error::DegreeTooLarge { degree: t, n });
    }
    let alphabet: u128 = if mode == LeadingMode::Unit { 16 } else { 4 };
    let needed = alphabet.checked_pow(t as u32).unwrap_or(u128::MAX);
    if needed > u128::from(budget) {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let xn1 = SkewPoly::x_n_minus_one(n);
    let mut out = Vec::new();
    let mut coeffs = vec![RElem::ZERO; t + 1];
    coeffs[t] = RElem::ONE;
    for idx in 0..needed as u64 {
        for (i, c) in coeffs.iter_mut().take(t).enumerate() {
            let digit = ((idx >> (if alphabet == 16 { 4 } else { 2 } * i)) & (alphabet as u64 - 1)) as u8;
            *c = RElem::from_index(digit);
        }
        let cand = SkewPoly::new(coeffs.clone());
        if cand.right_divides(&xn1)? {
            out.push(match mode {
                LeadingMode::Unit => cand,
                LeadingMode::V => cand.scale_left(RElem::V),
                LeadingMode::V1 => cand.scale_left(RElem::V1),
            });
        }
    }
    out.sort();
    Ok(out)
}

/// Outcome of scanning a code for minimal-degree polynomials with a
/// non-unit leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinDegreeReport {
    /// `None` when no nonzero word has a non-unit leading coefficient.
    pub min_degree: Option<usize>,
    /// The polynomials attaining `min_degree`, in code order.
    pub polys: Vec<SkewPoly>,
    /// How many of them are `v * g1` with `g1` over F4.
    pub v_form: usize,
    /// How many of them are `(1+v) * g1` with `g1` over F4.
    pub v1_form: usize,
}

impl MinDegreeReport {
    /// Every minimal polynomial factors as `v * g1` or `(1+v) * g1`.
    pub fn all_split(&self) -> bool {
        self.v_form + self.v1_form == self.polys.len()
    }
}

pub fn minimal_degree_scan(set: &CodeSet) -> MinDegreeReport {
    let n = set.n();
    let mut best: Option<usize> = None;
    let mut hits: Vec<u64> = Vec::new();
    for &w in set.packed() {
        if w == 0 {
            continue;
        }
        let deg = (63 - w.leading_zeros() as usize) / 4;
        if RElem::from_index(word::nibble(w, deg)).is_unit() {
            continue;
        }
        match best {
            Some(b) if deg > b => {}
            Some(b) if deg == b => hits.push(w),
            _ => {
                best = Some(deg);
                hits.clear();
                hits.push(w);
            }
        }
    }
    let polys: Vec<SkewPoly> = hits.iter().map(|&w| Codeword::unpack(w, n).to_poly()).collect();
    let v_form = polys.iter().filter(|p| p.coeffs().iter().all(|c| c.a.is_zero())).count();
    let v1_form = polys.iter().filter(|p| p.coeffs().iter().all(|c| c.a == c.b)).count();
    MinDegreeReport { min_degree: best, polys, v_form, v1_form }
}

/// Structured description of a code for files and reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeDescription {
    pub n: usize,
    pub generators: Vec<SkewPoly>,
    pub classification: Vec<String>,
}

impl CodeDescription {
    pub fn of(code: &SkewCyclicCode) -> CodeDescription {
        CodeDescription {
            n: code.n(),
            generators: code.generators().to_vec(),
            classification: code.forms().iter().map(|f| f.label().to_string()).collect(),
        }
    }

    /// `key: value` lines; one `generator:` / `classification:` line per
    /// generator.
    pub fn to_text(&self) -> String {
        let mut out = format!("n: {}\n", self.n);
        for (g, c) in self.generators.iter().zip(&self.classification) {
            out.push_str(&format!("generator: {g}\nclassification: {c}\n"));
        }
        out
    }

    pub fn from_text(text: &str) -> Result<CodeDescription> {
        let mut n = None;
        let mut generators = Vec::new();
        let mut classification = Vec::new();
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
            let (key, value) = line
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("expected `key: value`, got `{line}`")))?;
            let value = value.trim();
            match key.trim() {
                "n" => {
                    n = Some(value.parse().map_err(|_| Error::Parse(format!("bad length `{value}`")))?)
                }
                "generator" => generators.push(value.parse()?),
                "classification" => classification.push(value.to_string()),
                other => return Err(Error::Parse(format!("unknown field `{other}`"))),
            }
        }
        let n = n.ok_or_else(|| Error::Parse("missing `n`".into()))?;
        Ok(CodeDescription { n, generators, classification })
    }

    pub fn build(&self) -> Result<SkewCyclicCode> {
        SkewCyclicCode::new(self.n, self.generators.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn p(s: &str) -> SkewPoly {
        s.parse().unwrap()
    }

    fn w(s: &str) -> Codeword {
        s.parse().unwrap()
    }

    /// Closure by the literal definition: a hash set grown round by round
    /// under pairwise sums, the 16 scalars and the skew shift until stable.
    fn naive_closure(n: usize, gens: &[SkewPoly]) -> HashSet<Codeword> {
        let mut set: HashSet<Codeword> =
            gens.iter().map(|g| Codeword::from_poly(g, n).unwrap()).collect();
        set.insert(Codeword::zero(n));
        loop {
            let words: Vec<Codeword> = set.iter().cloned().collect();
            let mut next = set.clone();
            for a in &words {
                for b in &words {
                    next.insert(a + b);
                }
                for l in RElem::all() {
                    next.insert(a.scale(l));
                }
                next.insert(a.sigma_theta());
            }
            if next.len() == set.len() {
                return set;
            }
            set = next;
        }
    }

    /// Left R-span of x^i g for 0 <= i < n - t.
    fn left_span_of_shifts(n: usize, g: &SkewPoly) -> HashSet<Codeword> {
        let t = g.degree().unwrap();
        let shifts: Vec<SkewPoly> =
            (0..n - t).map(|i| &SkewPoly::monomial(RElem::ONE, i) * g).collect();
        let mut out = HashSet::new();
        let k = shifts.len();
        for idx in 0..16u64.pow(k as u32) {
            let mut acc = SkewPoly::zero();
            for (i, s) in shifts.iter().enumerate() {
                let l = RElem::from_index(((idx >> (4 * i)) & 0xf) as u8);
                acc = &acc + &s.scale_left(l);
            }
            out.insert(Codeword::from_poly(&acc, n).unwrap());
        }
        out
    }

    fn as_set(set: &CodeSet) -> HashSet<Codeword> {
        set.iter().collect()
    }

    #[test]
    fn closure_matches_naive_fixpoint() {
        let cases = [
            (2, vec![p("x+1")]),
            (2, vec![p("v*x + w")]),
            (2, vec![p("v"), p("w*v*x")]),
            (3, vec![p("x^2+x+1")]),
            (4, vec![p("v(x^2+1)")]),
            (4, vec![p("x^3+x^2+x+1"), p("v(x^2+1)")]),
            (6, vec![p("v(x^4+x^2+1)")]),
        ];
        for (n, gens) in cases {
            let code = SkewCyclicCode::new(n, gens.clone()).unwrap();
            let set = code.materialize(DEFAULT_CAP).unwrap();
            assert_eq!(as_set(&set), naive_closure(n, &gens), "n={n} gens={gens:?}");
        }
    }

    #[test]
    fn table2_code_has_sixteen_words() {
        let code = SkewCyclicCode::single(6, p("v(x^4+x^2+1)")).unwrap();
        let set = code.materialize(DEFAULT_CAP).unwrap();
        assert_eq!(set.len(), 16);
        assert!(set.contains(&Codeword::zero(6)).unwrap());
        assert!(set.contains(&w("v,0,v,0,v,0")).unwrap());
        assert!(!set.contains(&w("1,0,0,0,0,0")).unwrap());
        assert!(!set.all_ones_in());
        assert_eq!(set.contains(&Codeword::zero(5)), Err(Error::LengthMismatch { expected: 6, got: 5 }));
    }

    #[test]
    fn x_plus_one_at_length_two() {
        let code = SkewCyclicCode::single(2, p("x+1")).unwrap();
        let set = code.materialize(DEFAULT_CAP).unwrap();
        let expected: HashSet<Codeword> =
            RElem::all().map(|l| Codeword::new(vec![l, l])).collect();
        assert_eq!(as_set(&set), expected);
        assert!(set.all_ones_in());
        assert!(code.contains_all_ones());
    }

    #[test]
    fn whole_space_contains_all_ones() {
        let code = SkewCyclicCode::single(3, SkewPoly::one()).unwrap();
        assert_eq!(code.dimension(), 12);
        assert!(code.materialize(DEFAULT_CAP).unwrap().all_ones_in());
    }

    #[test]
    fn generator_forms() {
        assert_eq!(
            GeneratorForm::of(&p("x^4 + (v+w)*x^2 + 1"), 10).unwrap(),
            GeneratorForm::UnitDivisor
        );
        assert_eq!(
            GeneratorForm::of(&p("v(x^4+x^2+1)"), 6).unwrap(),
            GeneratorForm::VType { g1: p("x^4+x^2+1") }
        );
        assert_eq!(
            GeneratorForm::of(&p("(1+v)(x+1)"), 3).unwrap(),
            GeneratorForm::V1Type { g1: p("x+1") }
        );
        // (x+v) is not a right divisor of x^4 - 1 and has a unit lead.
        assert_eq!(GeneratorForm::of(&p("x+v"), 4).unwrap(), GeneratorForm::Generic);
        assert_eq!(GeneratorForm::of(&p("v*x + 1"), 4).unwrap(), GeneratorForm::Generic);
        assert!(SkewCyclicCode::single(4, SkewPoly::zero()).is_err());
        assert!(SkewCyclicCode::single(4, p("x^4")).is_err());
        assert_eq!(SkewCyclicCode::new(4, vec![]).unwrap_err(), Error::NoGenerators);
    }

    #[test]
    fn cap_is_enforced() {
        let code = SkewCyclicCode::single(10, p("x^4 + (v+w)*x^2 + 1")).unwrap();
        assert_eq!(code.dimension(), 24);
        assert_eq!(
            code.materialize(1 << 20).unwrap_err(),
            Error::CapExceeded { dimension: 24, cap: 1 << 20 }
        );
    }

    #[test]
    fn divisors_of_x2_minus_1() {
        let found = enumerate_right_divisors(2, 1, LeadingMode::Unit, DEFAULT_BUDGET).unwrap();
        assert_eq!(found, vec![p("x+1"), p("x + (w+v)"), p("x + (w2+v)")]);
    }

    #[test]
    fn divisor_search_contains_examples() {
        let ex1 = enumerate_right_divisors(10, 4, LeadingMode::Unit, DEFAULT_BUDGET).unwrap();
        assert!(ex1.contains(&p("x^4 + (v+w)*x^2 + 1")));
        let ex4 = enumerate_right_divisors(6, 4, LeadingMode::V, DEFAULT_BUDGET).unwrap();
        assert!(ex4.contains(&p("v(x^4+x^2+1)")));
        let v1 = enumerate_right_divisors(6, 4, LeadingMode::V1, DEFAULT_BUDGET).unwrap();
        assert!(v1.contains(&p("(1+v)(x^4+x^2+1)")));
        let mut sorted = ex1.clone();
        sorted.sort();
        assert_eq!(sorted, ex1);
    }

    #[test]
    fn divisor_search_limits() {
        assert!(matches!(
            enumerate_right_divisors(10, 7, LeadingMode::Unit, 1000),
            Err(Error::BudgetExceeded { .. })
        ));
        assert!(enumerate_right_divisors(4, 4, LeadingMode::Unit, DEFAULT_BUDGET).is_err());
        assert!(enumerate_right_divisors(4, 0, LeadingMode::V, DEFAULT_BUDGET).is_err());
    }

    #[test]
    fn minimal_degree_examples() {
        let set = SkewCyclicCode::single(6, p("v(x^4+x^2+1)"))
            .unwrap()
            .materialize(DEFAULT_CAP)
            .unwrap();
        let rep = minimal_degree_scan(&set);
        assert_eq!(rep.min_degree, Some(4));
        assert!(rep.all_split());
        assert!(rep.polys.contains(&p("v(x^4+x^2+1)")));

        let zero = CodeSet::from_words(3, &[Codeword::zero(3)]).unwrap();
        let rep = minimal_degree_scan(&zero);
        assert_eq!(rep.min_degree, None);
        assert!(rep.polys.is_empty());

        let set = SkewCyclicCode::single(2, p("x+1")).unwrap().materialize(DEFAULT_CAP).unwrap();
        let rep = minimal_degree_scan(&set);
        assert_eq!(rep.min_degree, Some(1));
        assert_eq!((rep.v_form, rep.v1_form), (3, 3));
        assert!(rep.polys.contains(&p("v(x+1)")));
        assert!(rep.polys.contains(&p("(1+v)(x+1)")));
    }

    #[test]
    fn unit_leading_detection_matches_scan() {
        let cases = [
            (6, p("v(x^4+x^2+1)")),
            (2, p("x+1")),
            (4, p("v(x^2+1)")),
            (3, p("v(x+1)")),
            (4, p("v*x + w")),
        ];
        for (n, g) in cases {
            let code = SkewCyclicCode::single(n, g.clone()).unwrap();
            let set = code.materialize(DEFAULT_CAP).unwrap();
            let brute = set
                .iter()
                .filter(|c| !c.is_zero())
                .any(|c| c.to_poly().leading().unwrap().is_unit());
            assert_eq!(code.span().has_unit_leading_word(), brute, "n={n} g={g}");
        }
    }

    #[test]
    fn unit_divisor_codes_match_left_span() {
        for n in 2..=5usize {
            for t in 1..n {
                if n - t > 3 {
                    continue;
                }
                for g in enumerate_right_divisors(n, t, LeadingMode::Unit, DEFAULT_BUDGET).unwrap() {
                    let code = SkewCyclicCode::single(n, g.clone()).unwrap();
                    assert_eq!(code.size(), 16u128.pow((n - t) as u32));
                    let set = code.materialize(DEFAULT_CAP).unwrap();
                    assert_eq!(as_set(&set), left_span_of_shifts(n, &g), "n={n} g={g}");
                    for c in set.iter() {
                        assert!(set.contains(&c.sigma_theta()).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn remainder_membership_agrees_exhaustively() {
        for n in 1..=3usize {
            for t in 1..n {
                for g in enumerate_right_divisors(n, t, LeadingMode::Unit, DEFAULT_BUDGET).unwrap() {
                    let code = SkewCyclicCode::single(n, g).unwrap();
                    let set = code.materialize(DEFAULT_CAP).unwrap();
                    for packed in 0..(1u64 << (4 * n)) {
                        let c = Codeword::unpack(packed, n);
                        let fast = code.contains_by_remainder(&c).unwrap().unwrap();
                        assert_eq!(fast, set.contains(&c).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn remainder_membership_agrees_on_random_words() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for (n, t) in [(4usize, 2usize), (5, 1), (6, 2), (6, 3)] {
            let divisors = enumerate_right_divisors(n, t, LeadingMode::Unit, DEFAULT_BUDGET).unwrap();
            let code = SkewCyclicCode::single(n, divisors[divisors.len() / 2].clone()).unwrap();
            let set = code.materialize(DEFAULT_CAP).unwrap();
            let members: Vec<Codeword> = set.iter().collect();
            for i in 0..2_500 {
                let c = if i % 2 == 0 {
                    Codeword::unpack(rng.gen::<u64>() & ((1u64 << (4 * n)) - 1), n)
                } else {
                    members[rng.gen_range(0..members.len())].clone()
                };
                assert_eq!(code.contains_by_remainder(&c).unwrap().unwrap(), set.contains(&c).unwrap());
                assert_eq!(code.contains(&c).unwrap(), set.contains(&c).unwrap());
            }
        }
    }

    #[test]
    fn odd_length_codes_are_cyclic() {
        for n in [3usize, 5] {
            for g in [p("v*x + 1"), p("x + w*v"), p("v(x+1)"), p("x^2 + (1+v)x + w")] {
                let set = SkewCyclicCode::single(n, g).unwrap().materialize(DEFAULT_CAP).unwrap();
                for c in set.iter() {
                    assert!(set.contains(&c.cyclic_shift()).unwrap());
                }
            }
        }
    }

    #[test]
    fn description_round_trip() {
        let code = SkewCyclicCode::single(6, p("v(x^4+x^2+1)")).unwrap();
        let desc = CodeDescription::of(&code);
        let text = desc.to_text();
        assert_eq!(text, "n: 6\ngenerator: [v, 0, v, 0, v]\nclassification: v-type\n");
        assert_eq!(CodeDescription::from_text(&text).unwrap(), desc);
        assert_eq!(desc.build().unwrap().dimension(), code.dimension());
        assert!(CodeDescription::from_text("generator: [1]").is_err());
        assert!(CodeDescription::from_text("n: 3\nbogus: 1").is_err());
    }

    #[test]
    fn export_format() {
        let set = SkewCyclicCode::single(2, p("x+1")).unwrap().materialize(DEFAULT_CAP).unwrap();
        let text = set.export();
        assert_eq!(text.lines().count(), 16);
        assert_eq!(text.lines().next(), Some("0,0"));
        assert!(text.lines().any(|l| l == "w2+v,w2+v"));
    }
}
