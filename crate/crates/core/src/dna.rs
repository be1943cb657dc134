//! DNA words, the two-base encoding of R, and reversibility of codes.
//!
//! Bases correspond to F4 as `A=0, T=1, C=w, G=w2`, so Watson-Crick
//! complementation is `x -> x + 1`. A ring element maps to the two bases of
//! its Gray image `(a+b, a)`. Reversing an encoded string is the same as
//! applying theta entrywise and reversing the word over R.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::code::{CodeSet, GeneratorForm, SkewCyclicCode};
use crate::error::{Error, Result};
use crate::gf4::Gf4;
use crate::poly::SkewPoly;
use crate::ring::RElem;
use crate::word::{self, Codeword};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DnaBase {
    A,
    C,
    G,
    T,
}

impl DnaBase {
    pub fn of(x: Gf4) -> DnaBase {
        match x.index() {
            0 => DnaBase::A,
            1 => DnaBase::T,
            2 => DnaBase::C,
            _ => DnaBase::G,
        }
    }

    pub fn gf4(self) -> Gf4 {
        match self {
            DnaBase::A => Gf4::ZERO,
            DnaBase::T => Gf4::ONE,
            DnaBase::C => Gf4::W,
            DnaBase::G => Gf4::W2,
        }
    }

    /// Watson-Crick partner.
    pub fn complement(self) -> DnaBase {
        match self {
            DnaBase::A => DnaBase::T,
            DnaBase::T => DnaBase::A,
            DnaBase::C => DnaBase::G,
            DnaBase::G => DnaBase::C,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            DnaBase::A => 'A',
            DnaBase::C => 'C',
            DnaBase::G => 'G',
            DnaBase::T => 'T',
        }
    }

    pub fn from_char(c: char) -> Result<DnaBase> {
        match c {
            'A' => Ok(DnaBase::A),
            'C' => Ok(DnaBase::C),
            'G' => Ok(DnaBase::G),
            'T' => Ok(DnaBase::T),
            other => Err(Error::Parse(format!("`{other}` is not a DNA base"))),
        }
    }
}

/// A DNA strand written 5' to 3'.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DnaWord(Vec<DnaBase>);

impl DnaWord {
    pub fn new(bases: Vec<DnaBase>) -> DnaWord {
        DnaWord(bases)
    }

    pub fn bases(&self) -> &[DnaBase] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reverse(&self) -> DnaWord {
        DnaWord(self.0.iter().rev().copied().collect())
    }

    pub fn complement(&self) -> DnaWord {
        DnaWord(self.0.iter().map(|b| b.complement()).collect())
    }

    pub fn reverse_complement(&self) -> DnaWord {
        self.reverse().complement()
    }

    /// Entries of the word over F4, base by base.
    pub fn to_gf4(&self) -> Vec<Gf4> {
        self.0.iter().map(|b| b.gf4()).collect()
    }
}

impl fmt::Display for DnaWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|b| write!(f, "{}", b.as_char()))
    }
}

impl fmt::Debug for DnaWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for DnaWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<DnaWord> {
        s.trim().chars().map(DnaBase::from_char).collect::<Result<Vec<_>>>().map(DnaWord)
    }
}

/// The two bases of one ring element.
pub fn encode_element(x: RElem) -> [DnaBase; 2] {
    let (p, q) = x.gray();
    [DnaBase::of(p), DnaBase::of(q)]
}

pub fn encode_word(c: &Codeword) -> DnaWord {
    DnaWord(c.entries().iter().flat_map(|&x| encode_element(x)).collect())
}

pub fn decode_dna(w: &DnaWord) -> Result<Codeword> {
    if w.len() % 2 != 0 {
        return Err(Error::OddLength(w.len()));
    }
    Ok(Codeword::new(
        w.bases().chunks(2).map(|pair| RElem::from_gray((pair[0].gf4(), pair[1].gf4()))).collect(),
    ))
}

/// `theta(c)^r`: the word whose encoding is the reversed encoding of `c`.
pub fn r_level_reverse(c: &Codeword) -> Codeword {
    c.map(RElem::theta).reversed()
}

/// `c + (1, ..., 1)`: the word whose encoding is the complement of `c`'s.
pub fn r_level_complement(c: &Codeword) -> Codeword {
    c.map(RElem::complement)
}

fn rev_packed(w: u64, n: usize) -> u64 {
    word::reverse_packed(word::theta_packed(w, n), n)
}

pub fn is_reversible_dna(set: &CodeSet) -> bool {
    let n = set.n();
    set.packed().iter().all(|&w| set.contains_packed(rev_packed(w, n)))
}

pub fn is_complement_closed(set: &CodeSet) -> bool {
    let ones = word::all_ones_packed(set.n());
    set.packed().iter().all(|&w| set.contains_packed(w ^ ones))
}

pub fn is_reverse_complement_dna(set: &CodeSet) -> bool {
    let n = set.n();
    let ones = word::all_ones_packed(n);
    set.packed().iter().all(|&w| set.contains_packed(rev_packed(w, n) ^ ones))
}

/// Reversibility from the F2 basis alone.
///
/// `c -> theta(c)^r` is additive, so the code is reversible iff the image of
/// every basis vector lies in the code. Works for codes too large to
/// materialize.
pub fn is_reversible_by_basis(code: &SkewCyclicCode) -> bool {
    let n = code.n();
    let span = code.span();
    span.basis().all(|b| span.contains(rev_packed(b, n)))
}

/// For a linear code, closure under reverse-complement is reversibility plus
/// membership of the all-ones word.
pub fn is_reverse_complement_by_basis(code: &SkewCyclicCode) -> bool {
    code.contains_all_ones() && is_reversible_by_basis(code)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Prediction {
    Yes,
    No,
    Unknown,
}

impl Prediction {
    fn from_bool(b: bool) -> Prediction {
        if b {
            Prediction::Yes
        } else {
            Prediction::No
        }
    }

    /// Whether the prediction is consistent with an observed value.
    pub fn agrees_with(self, observed: bool) -> bool {
        match self {
            Prediction::Yes => observed,
            Prediction::No => !observed,
            Prediction::Unknown => true,
        }
    }
}

impl fmt::Display for Prediction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Prediction::Yes => "yes",
            Prediction::No => "no",
            Prediction::Unknown => "unknown",
        })
    }
}

/// Theorem-based prediction of DNA properties for a single-generator code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DnaClassification {
    pub n_even: bool,
    pub generator_form: String,
    pub degree_even: bool,
    pub palindromic: bool,
    pub theta_palindromic: bool,
    /// Some left unit multiple of the monic generator is theta-palindromic.
    pub theta_palindromic_associate: bool,
    /// The generated code also contains a polynomial with unit leading
    /// coefficient, so it is not a genuine non-unit (v / 1+v) code.
    pub has_unit_leading_word: bool,
    pub predicted_reversible: Prediction,
    pub predicted_reverse_complement: Prediction,
    /// Which result the prediction rests on.
    pub basis: String,
}

/// Smallest-index unit `u` for which `u * g` is theta-palindromic.
pub fn theta_palindromic_associate(g: &SkewPoly) -> Option<SkewPoly> {
    RElem::units()
        .map(|u| g.scale_left(u))
        .find(|h| h.is_theta_palindromic().unwrap_or(false))
}

/// Predicts reversibility from the generator alone, emitting `Unknown`
/// whenever no proven statement covers the case.
pub fn classify(code: &SkewCyclicCode) -> DnaClassification {
    let n = code.n();
    let n_even = n % 2 == 0;
    let g = &code.generators()[0];
    let t = g.degree().unwrap_or(0);
    let lead = g.leading().unwrap_or(RElem::ONE);
    // A unit-leading generator is normalized to its monic associate.
    let monic = match lead.inv() {
        Ok(inv) => g.scale_left(inv),
        Err(_) => g.clone(),
    };
    let palindromic = monic.is_palindromic().unwrap_or(false);
    let theta_palindromic = monic.is_theta_palindromic().unwrap_or(false);
    let associate = theta_palindromic_associate(&monic).is_some();
    let unit_word = code.span().has_unit_leading_word();
    let all_ones = code.contains_all_ones();

    let mut out = DnaClassification {
        n_even,
        generator_form: code.forms()[0].label().to_string(),
        degree_even: t % 2 == 0,
        palindromic,
        theta_palindromic,
        theta_palindromic_associate: associate,
        has_unit_leading_word: unit_word,
        predicted_reversible: Prediction::Unknown,
        predicted_reverse_complement: Prediction::Unknown,
        basis: "no applicable result".to_string(),
    };
    if code.generators().len() != 1 {
        out.basis = "multiple generators".to_string();
        return out;
    }

    let (reversible, basis) = match (&code.forms()[0], n_even, t % 2 == 0) {
        (GeneratorForm::UnitDivisor, true, true) => {
            (Prediction::from_bool(palindromic), "even length, even degree: palindromic generator")
        }
        (GeneratorForm::UnitDivisor, true, false) => (
            Prediction::from_bool(associate),
            "even length, odd degree: theta-palindromic generator",
        ),
        (GeneratorForm::UnitDivisor, false, _) => {
            // For odd n, x^n g = theta(g) lies in the code, so the monic
            // generator is fixed by theta and has coefficients in F4.
            if palindromic || theta_palindromic {
                (Prediction::Yes, "odd length: palindromic generator")
            } else if monic.is_over_f4() {
                (Prediction::No, "odd length: reversible codes have a palindromic F4 generator")
            } else {
                (Prediction::Unknown, "odd length: generator outside F4[x]")
            }
        }
        (GeneratorForm::VType { g1 } | GeneratorForm::V1Type { g1 }, _, _) if unit_word => {
            // The code is really generated by a unit-leading polynomial.
            // For odd n that polynomial is g1 itself.
            if !n_even {
                let pal = g1.is_palindromic().unwrap_or(false);
                (Prediction::from_bool(pal), "odd length: non-unit generator collapses to g1")
            } else {
                (Prediction::Unknown, "non-unit generator whose code has unit-leading words")
            }
        }
        (GeneratorForm::VType { g1 } | GeneratorForm::V1Type { g1 }, true, true) => (
            Prediction::from_bool(g1.is_palindromic().unwrap_or(false)),
            "even length, even degree: palindromic v-type generator",
        ),
        (GeneratorForm::VType { .. } | GeneratorForm::V1Type { .. }, _, _) => {
            (Prediction::No, "non-unit generator of odd degree or odd length: never reversible")
        }
        (GeneratorForm::Generic, _, _) => (Prediction::Unknown, "generic generator"),
    };
    out.predicted_reversible = reversible;
    out.basis = basis.to_string();

    // Closure under reverse-complement forces the all-ones word into a
    // linear code; given that, it is equivalent to reversibility.
    out.predicted_reverse_complement = match reversible {
        _ if !all_ones => Prediction::No,
        Prediction::Unknown => Prediction::Unknown,
        r => r,
    };
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::DEFAULT_CAP;

    fn w(s: &str) -> Codeword {
        s.parse().unwrap()
    }

    fn d(s: &str) -> DnaWord {
        s.parse().unwrap()
    }

    fn p(s: &str) -> SkewPoly {
        s.parse().unwrap()
    }

    fn set_of(n: usize, g: &str) -> CodeSet {
        SkewCyclicCode::single(n, p(g)).unwrap().materialize(DEFAULT_CAP).unwrap()
    }

    #[test]
    fn base_association() {
        assert_eq!(DnaBase::of(Gf4::ZERO), DnaBase::A);
        assert_eq!(DnaBase::of(Gf4::W2), DnaBase::G);
        for x in Gf4::ALL {
            assert_eq!(DnaBase::of(x).gf4(), x);
            assert_eq!(DnaBase::of(x).complement(), DnaBase::of(x + Gf4::ONE));
        }
    }

    #[test]
    fn encoding() {
        assert_eq!(encode_word(&w("v")).to_string(), "TA");
        assert_eq!(encode_word(&w("v,0,v,0,v,0")).to_string(), "TAAATAAATAAA");
        assert_eq!(encode_word(&Codeword::zero(6)).to_string(), "AAAAAAAAAAAA");
    }

    #[test]
    fn decoding() {
        assert_eq!(decode_dna(&d("GC")).unwrap(), w("w+v"));
        assert_eq!(decode_dna(&d("AT")).unwrap(), w("1+v"));
        assert_eq!(decode_dna(&d("ATA")), Err(Error::OddLength(3)));
        assert!("ATX".parse::<DnaWord>().is_err());
        for packed in 0..256u64 {
            let c = Codeword::unpack(packed, 2);
            assert_eq!(decode_dna(&encode_word(&c)).unwrap(), c);
        }
    }

    #[test]
    fn string_operations() {
        assert_eq!(d("TAAT").reverse(), d("TAAT"));
        assert_eq!(d("TAAATAAATAAA").complement(), d("ATTTATTTATTT"));
        assert_eq!(d("AA").reverse_complement(), d("TT"));
    }

    #[test]
    fn ring_level_reverse() {
        assert_eq!(r_level_reverse(&w("v,0")), w("0,1+v"));
        assert_eq!(encode_word(&w("v,0")).to_string(), "TAAA");
        assert_eq!(encode_word(&w("0,1+v")).to_string(), "AAAT");
        let f4 = w("1,w,w2");
        assert_eq!(r_level_reverse(&f4), f4.reversed());
        for packed in 0..(1u64 << 8) {
            let c = Codeword::unpack(packed, 2);
            assert_eq!(r_level_reverse(&r_level_reverse(&c)), c);
            assert_eq!(encode_word(&r_level_reverse(&c)), encode_word(&c).reverse());
        }
    }

    #[test]
    fn ring_level_complement() {
        assert_eq!(r_level_complement(&Codeword::zero(3)), Codeword::all_ones(3));
        assert_eq!(encode_word(&w("v")).complement(), encode_word(&w("1+v")));
        for packed in 0..(1u64 << 8) {
            let c = Codeword::unpack(packed, 2);
            assert_eq!(r_level_complement(&r_level_complement(&c)), c);
            assert_eq!(encode_word(&r_level_complement(&c)), encode_word(&c).complement());
        }
    }

    #[test]
    fn reversibility_checks() {
        let t2 = set_of(6, "v(x^4+x^2+1)");
        assert!(is_reversible_dna(&t2));
        assert!(!is_reverse_complement_dna(&t2));
        assert!(!is_complement_closed(&t2));

        let zero = CodeSet::from_words(4, &[Codeword::zero(4)]).unwrap();
        assert!(is_reversible_dna(&zero));
        assert!(!is_reverse_complement_dna(&zero));

        let rep = set_of(2, "x+1");
        assert!(is_reversible_dna(&rep));
        assert!(rep.all_ones_in());
        assert!(is_reverse_complement_dna(&rep));
    }

    /// At odd length v*g1 generates the same code as g1, since
    /// x^n * v g1 = (1+v) g1. With g1 = x+1 palindromic that code is
    /// reversible.
    #[test]
    fn odd_length_v_type_collapses() {
        let via_v = SkewCyclicCode::single(3, p("v(x+1)")).unwrap();
        let plain = SkewCyclicCode::single(3, p("x+1")).unwrap();
        assert_eq!(via_v.span(), plain.span());
        assert!(is_reversible_dna(&via_v.materialize(DEFAULT_CAP).unwrap()));
    }

    #[test]
    fn basis_shortcut_agrees() {
        for (n, g) in [(6, "v(x^4+x^2+1)"), (2, "x+1"), (4, "x+v"), (4, "v*x^2 + w"), (3, "x + w")] {
            let code = SkewCyclicCode::single(n, p(g)).unwrap();
            let set = code.materialize(DEFAULT_CAP).unwrap();
            assert_eq!(is_reversible_by_basis(&code), is_reversible_dna(&set), "{g}");
            assert_eq!(is_reverse_complement_by_basis(&code), is_reverse_complement_dna(&set), "{g}");
        }
    }

    #[test]
    fn classification_examples() {
        let ex1 = classify(&SkewCyclicCode::single(10, p("x^4 + (v+w)*x^2 + 1")).unwrap());
        assert_eq!(ex1.predicted_reversible, Prediction::Yes);
        assert!(ex1.palindromic && ex1.n_even && ex1.degree_even);

        let ex2 = classify(&SkewCyclicCode::single(12, p("x^3 + (v+w2)*x^2 + (v+w)*x + 1")).unwrap());
        assert_eq!(ex2.predicted_reversible, Prediction::Yes);
        assert!(ex2.theta_palindromic);

        let ex4 = classify(&SkewCyclicCode::single(6, p("v(x^4+x^2+1)")).unwrap());
        assert_eq!(ex4.generator_form, "v-type");
        assert_eq!(ex4.predicted_reversible, Prediction::Yes);
        assert_eq!(ex4.predicted_reverse_complement, Prediction::No);

        let generic = classify(&SkewCyclicCode::single(4, p("x+v")).unwrap());
        assert_eq!(generic.predicted_reversible, Prediction::Unknown);
    }

    #[test]
    fn odd_length_v_type_is_classified_through_g1() {
        let c = classify(&SkewCyclicCode::single(5, p("v(x+1)")).unwrap());
        assert!(c.has_unit_leading_word);
        assert_eq!(c.predicted_reversible, Prediction::Yes);
        let set = SkewCyclicCode::single(5, p("v(x+1)")).unwrap().materialize(DEFAULT_CAP).unwrap();
        assert!(is_reversible_dna(&set));
    }
}
