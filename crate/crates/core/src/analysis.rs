//! Hamming and Lee metrics, Gray images, and the quasi-cyclic structure of
//! Gray images of skew cyclic codes.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::code::CodeSet;
use crate::error::{Error, Result};
use crate::gf4::Gf4;
use crate::ring::RElem;
use crate::word::Codeword;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Metric {
    Hamming,
    Lee,
}

/// Gray image of a word: `(a_0+b_0, a_0, a_1+b_1, a_1, ...)`.
pub type GrayWord = Vec<Gf4>;

pub fn hamming_weight<T: Default + PartialEq>(w: &[T]) -> usize {
    let zero = T::default();
    w.iter().filter(|x| **x != zero).count()
}

pub fn hamming_distance<T: PartialEq>(u: &[T], v: &[T]) -> Result<usize> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch { expected: u.len(), got: v.len() });
    }
    Ok(u.iter().zip(v).filter(|(x, y)| x != y).count())
}

/// Hamming weight of the Gray image of `x`.
pub fn lee_weight(x: RElem) -> usize {
    let (p, q) = x.gray();
    usize::from(!p.is_zero()) + usize::from(!q.is_zero())
}

pub fn lee_word_weight(c: &Codeword) -> usize {
    c.entries().iter().map(|&x| lee_weight(x)).sum()
}

pub fn lee_distance(u: &Codeword, v: &Codeword) -> Result<usize> {
    u.check_len(v.len())?;
    Ok(lee_word_weight(&(u + v)))
}

pub fn weight(c: &Codeword, metric: Metric) -> usize {
    match metric {
        Metric::Hamming => hamming_weight(c.entries()),
        Metric::Lee => lee_word_weight(c),
    }
}

/// Minimum nonzero weight; equals the minimum pairwise distance because the
/// set is an additive group.
pub fn min_distance(set: &CodeSet, metric: Metric) -> Result<usize> {
    set.iter()
        .filter(|c| !c.is_zero())
        .map(|c| weight(&c, metric))
        .min()
        .ok_or(Error::TrivialCode)
}

/// Minimum over all distinct pairs, quadratic in the code size.
pub fn min_pairwise_distance(set: &CodeSet, metric: Metric) -> Result<usize> {
    let words: Vec<Codeword> = set.iter().collect();
    let mut best: Option<usize> = None;
    for (i, u) in words.iter().enumerate() {
        for v in &words[i + 1..] {
            let d = match metric {
                Metric::Hamming => hamming_distance(u.entries(), v.entries())?,
                Metric::Lee => lee_distance(u, v)?,
            };
            best = Some(best.map_or(d, |b| b.min(d)));
        }
    }
    best.ok_or(Error::TrivialCode)
}

pub fn gray_image(c: &Codeword) -> GrayWord {
    c.entries()
        .iter()
        .flat_map(|&x| {
            let (p, q) = x.gray();
            [p, q]
        })
        .collect()
}

pub fn gray_preimage(g: &[Gf4]) -> Result<Codeword> {
    if g.len() % 2 != 0 {
        return Err(Error::OddLength(g.len()));
    }
    Ok(Codeword::new(g.chunks(2).map(|p| RElem::from_gray((p[0], p[1]))).collect()))
}

pub fn gray_image_set(set: &CodeSet) -> HashSet<GrayWord> {
    set.iter().map(|c| gray_image(&c)).collect()
}

/// 2-quasi-cyclic shift: rotation right by two positions.
pub fn tau2(g: &[Gf4]) -> Result<GrayWord> {
    if g.len() % 2 != 0 {
        return Err(Error::OddLength(g.len()));
    }
    let mut out = g.to_vec();
    if !out.is_empty() {
        out.rotate_right(2);
    }
    Ok(out)
}

/// Swaps positions `2i` and `2i+1` for every `i`.
pub fn pair_swap(g: &[Gf4]) -> Result<GrayWord> {
    if g.len() % 2 != 0 {
        return Err(Error::OddLength(g.len()));
    }
    Ok(g.chunks(2).flat_map(|p| [p[1], p[0]]).collect())
}

/// `pair_swap(tau2(gray(c))) == gray(sigma_theta(c))` for one word.
pub fn quasi_cyclic_identity_holds(c: &Codeword) -> bool {
    let lhs = tau2(&gray_image(c)).and_then(|t| pair_swap(&t));
    lhs.is_ok_and(|l| l == gray_image(&c.sigma_theta()))
}

/// For every word, the Gray image of its skew shift equals the pair-swapped
/// 2-quasi-cyclic shift of its Gray image and lies in the Gray image of the
/// set. Holding for a set means the image is, up to the fixed permutation
/// `pair_swap`, closed under `tau2`.
pub fn verify_quasi_cyclic_equivalence(set: &CodeSet) -> bool {
    let image = gray_image_set(set);
    set.iter().all(|c| {
        let shifted = gray_image(&c.sigma_theta());
        quasi_cyclic_identity_holds(&c) && image.contains(&shifted)
    })
}

/// Gray image is closed under `pair_swap . tau2`.
pub fn gray_image_closed_under_swap_shift(set: &CodeSet) -> bool {
    let image = gray_image_set(set);
    image.iter().all(|g| {
        tau2(g).and_then(|t| pair_swap(&t)).is_ok_and(|s| image.contains(&s))
    })
}

/// Lee distance equals Hamming distance of Gray images on every pair.
pub fn verify_distance_preservation(pairs: &[(Codeword, Codeword)]) -> Result<bool> {
    for (u, w) in pairs {
        let dl = lee_distance(u, w)?;
        let dh = hamming_distance(&gray_image(u), &gray_image(w))?;
        if dl != dh {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{SkewCyclicCode, DEFAULT_CAP};
    use crate::dna::{encode_word, DnaWord};

    fn w(s: &str) -> Codeword {
        s.parse().unwrap()
    }

    fn set_of(n: usize, g: &str) -> CodeSet {
        SkewCyclicCode::single(n, g.parse().unwrap()).unwrap().materialize(DEFAULT_CAP).unwrap()
    }

    #[test]
    fn hamming_examples() {
        assert_eq!(hamming_weight(Codeword::zero(4).entries()), 0);
        assert_eq!(hamming_weight(w("1,0,w").entries()), 2);
        let a: DnaWord = "TAATTAATTAAT".parse().unwrap();
        let b: DnaWord = "AAAAAAAAAAAA".parse().unwrap();
        assert_eq!(hamming_distance(&a.to_gf4(), &b.to_gf4()).unwrap(), 6);
        assert!(hamming_distance(&[Gf4::ONE], &[]).is_err());
    }

    #[test]
    fn lee_weights() {
        assert_eq!(lee_weight(RElem::V), 1);
        assert_eq!(lee_weight(RElem::ONE), 2);
        assert_eq!(lee_weight(RElem::ZERO), 0);
        let zero_weight: Vec<RElem> = RElem::all().filter(|&x| lee_weight(x) == 0).collect();
        assert_eq!(zero_weight, vec![RElem::ZERO]);
        assert!(RElem::all().all(|x| lee_weight(x) <= 2));
        assert!(lee_distance(&w("1"), &w("1,1")).is_err());
    }

    #[test]
    fn lee_distance_is_dna_hamming_distance() {
        for a in 0..256u64 {
            for b in [0u64, 17, 200, 255] {
                let (u, v) = (Codeword::unpack(a, 2), Codeword::unpack(b, 2));
                let dna = hamming_distance(encode_word(&u).bases(), encode_word(&v).bases()).unwrap();
                assert_eq!(lee_distance(&u, &v).unwrap(), dna);
            }
        }
    }

    #[test]
    fn table2_code_distances() {
        let set = set_of(6, "v(x^4+x^2+1)");
        assert_eq!(min_distance(&set, Metric::Lee).unwrap(), 3);
        assert_eq!(min_distance(&set, Metric::Hamming).unwrap(), 3);
        assert_eq!(min_pairwise_distance(&set, Metric::Lee).unwrap(), 3);
        assert_eq!(min_pairwise_distance(&set, Metric::Hamming).unwrap(), 3);
    }

    #[test]
    fn repetition_code_distance() {
        let set = set_of(2, "x+1");
        assert_eq!(min_distance(&set, Metric::Hamming).unwrap(), 2);
        let zero = CodeSet::from_words(2, &[Codeword::zero(2)]).unwrap();
        assert_eq!(min_distance(&zero, Metric::Lee), Err(Error::TrivialCode));
    }

    #[test]
    fn min_weight_equals_min_pairwise() {
        for (n, g) in [(2, "x+1"), (4, "v(x^2+1)"), (4, "x^3 + x^2 + x + 1"), (6, "v(x^4+x^2+1)")] {
            let set = set_of(n, g);
            for m in [Metric::Hamming, Metric::Lee] {
                assert_eq!(min_distance(&set, m).unwrap(), min_pairwise_distance(&set, m).unwrap());
            }
        }
    }

    #[test]
    fn gray_images() {
        assert_eq!(gray_image(&w("v,0")), vec![Gf4::ONE, Gf4::ZERO, Gf4::ZERO, Gf4::ZERO]);
        assert_eq!(gray_image(&Codeword::zero(3)), vec![Gf4::ZERO; 6]);
        for a in [0u64, 0x12, 0xab, 0xff] {
            for b in [0u64, 0x34, 0x9c] {
                let (u, v) = (Codeword::unpack(a, 2), Codeword::unpack(b, 2));
                let sum: GrayWord =
                    gray_image(&u).iter().zip(gray_image(&v)).map(|(&x, y)| x + y).collect();
                assert_eq!(gray_image(&(&u + &v)), sum);
            }
            let c = Codeword::unpack(a, 2);
            assert_eq!(gray_preimage(&gray_image(&c)).unwrap(), c);
        }
        assert!(gray_preimage(&[Gf4::ONE]).is_err());
    }

    #[test]
    fn shifts_and_swaps() {
        let (p, q, r, s) = (Gf4::ONE, Gf4::W, Gf4::W2, Gf4::ZERO);
        assert_eq!(tau2(&[p, q, r, s]).unwrap(), vec![r, s, p, q]);
        assert_eq!(pair_swap(&[p, q, r, s]).unwrap(), vec![q, p, s, r]);
        assert_eq!(
            tau2(&gray_image(&w("v,0"))).unwrap(),
            vec![Gf4::ZERO, Gf4::ZERO, Gf4::ONE, Gf4::ZERO]
        );
        assert!(tau2(&[p, q, r]).is_err());
        assert!(pair_swap(&[p]).is_err());

        let g = gray_image(&w("1,v,w+v"));
        let mut t = g.clone();
        for _ in 0..3 {
            t = tau2(&t).unwrap();
        }
        assert_eq!(t, g);
        assert_eq!(pair_swap(&pair_swap(&g).unwrap()).unwrap(), g);
        for x in RElem::all() {
            let c = Codeword::new(vec![x]);
            assert_eq!(pair_swap(&gray_image(&c)).unwrap(), gray_image(&c.map(RElem::theta)));
        }
    }

    #[test]
    fn quasi_cyclic_structure() {
        let set = set_of(6, "v(x^4+x^2+1)");
        assert!(verify_quasi_cyclic_equivalence(&set));
        assert!(gray_image_closed_under_swap_shift(&set));

        // Over F4 the swap is trivial and the identity is the plain shift.
        let c = w("1,w,0,w2");
        assert_eq!(gray_image(&c.cyclic_shift()), tau2(&gray_image(&c)).unwrap());

        // Negative control: a set that is not closed under the skew shift.
        let bogus = CodeSet::from_words(3, &[Codeword::zero(3), w("v,0,0")]).unwrap();
        assert!(!verify_quasi_cyclic_equivalence(&bogus));
        assert!(!gray_image_closed_under_swap_shift(&bogus));
    }

    #[test]
    fn distance_preservation() {
        let u = w("v,0,0");
        assert!(verify_distance_preservation(&[(u.clone(), u.clone())]).unwrap());
        assert_eq!(lee_distance(&u, &Codeword::zero(3)).unwrap(), 1);
        let pairs: Vec<(Codeword, Codeword)> = RElem::all()
            .flat_map(|x| RElem::all().map(move |y| (Codeword::new(vec![x]), Codeword::new(vec![y]))))
            .collect();
        assert_eq!(pairs.len(), 256);
        assert!(verify_distance_preservation(&pairs).unwrap());
    }
}
