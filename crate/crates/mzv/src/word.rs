//! Words over the alphabet {x, y}, compositions, and their combinatorics.
//!
//! A composition (i₁,…,i_k) of positive integers corresponds to the word
//! z_{i₁}⋯z_{i_k} where z_i = x^{i-1}y; this is a bijection between
//! compositions and words ending in y (the empty composition ↔ the empty
//! word).  On top of the two types this module provides the gradings
//! (weight, length, colength, height), the duality involution τ, the word
//! order used to define Lyndon words, and the refinement order, conjugate
//! and reversal of compositions.

use crate::{Error, Result};
use std::cmp::Ordering;
use std::fmt;

/// One of the two noncommuting letters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    X,
    Y,
}

impl Letter {
    pub fn swapped(self) -> Letter {
        match self {
            Letter::X => Letter::Y,
            Letter::Y => Letter::X,
        }
    }

    pub fn char(self) -> char {
        match self {
            Letter::X => 'x',
            Letter::Y => 'y',
        }
    }
}

/// A word over {x, y}.  The empty word is the unit of concatenation.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn unit() -> Word {
        Word::default()
    }

    pub fn from_letters(letters: Vec<Letter>) -> Word {
        Word { letters }
    }

    /// x^k as a word.
    pub fn x_power(k: usize) -> Word {
        Word::from_letters(vec![Letter::X; k])
    }

    /// y^k as a word.
    pub fn y_power(k: usize) -> Word {
        Word::from_letters(vec![Letter::Y; k])
    }

    /// z_i = x^{i-1} y, the building block of words ending in y.
    pub fn z(i: u32) -> Word {
        let mut letters = vec![Letter::X; (i - 1) as usize];
        letters.push(Letter::Y);
        Word::from_letters(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn is_unit(&self) -> bool {
        self.letters.is_empty()
    }

    /// Total degree |w|.
    pub fn weight(&self) -> usize {
        self.letters.len()
    }

    /// y-degree ℓ(w).
    pub fn length(&self) -> usize {
        self.letters.iter().filter(|&&a| a == Letter::Y).count()
    }

    /// x-degree c(w) = |w| - ℓ(w).
    pub fn colength(&self) -> usize {
        self.weight() - self.length()
    }

    /// Number of occurrences of the pattern "xy" (an x immediately followed
    /// by a y).  On admissible words this is the number of factors x^p y^q
    /// in the alternating-block factorization.
    pub fn height(&self) -> usize {
        self.letters
            .windows(2)
            .filter(|p| p[0] == Letter::X && p[1] == Letter::Y)
            .count()
    }

    /// All four gradings at once: (weight, length, colength, height).
    pub fn gradings(&self) -> (usize, usize, usize, usize) {
        (self.weight(), self.length(), self.colength(), self.height())
    }

    /// A word is admissible when it is empty, or begins with x and ends
    /// with y.  Admissible words code convergent multiple zeta values.
    pub fn is_admissible(&self) -> bool {
        match (self.letters.first(), self.letters.last()) {
            (None, _) => true,
            (Some(&Letter::X), Some(&Letter::Y)) => true,
            _ => false,
        }
    }

    /// True when the word is the unit or ends in y (the words spanning ℍ¹).
    pub fn ends_in_y(&self) -> bool {
        matches!(self.letters.last(), None | Some(&Letter::Y))
    }

    /// The duality antiautomorphism τ: reverse the word and swap x ↔ y.
    pub fn tau(&self) -> Word {
        Word::from_letters(self.letters.iter().rev().map(|a| a.swapped()).collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    /// Number of leading y's.
    pub fn leading_ys(&self) -> usize {
        self.letters.iter().take_while(|&&a| a == Letter::Y).count()
    }

    /// Inverse of [`Composition::to_word`]; fails unless the word ends in y
    /// or is the unit.
    pub fn to_composition(&self) -> Result<Composition> {
        if !self.ends_in_y() {
            return Err(Error::domain(format!(
                "word {} does not end in y, so it has no composition",
                self
            )));
        }
        let mut parts = Vec::new();
        let mut run = 0u32;
        for &a in &self.letters {
            match a {
                Letter::X => run += 1,
                Letter::Y => {
                    parts.push(run + 1);
                    run = 0;
                }
            }
        }
        Ok(Composition { parts })
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        for &a in &self.letters {
            write!(f, "{}", a.char())?;
        }
        Ok(())
    }
}

/// Canonical term order: by weight, then letter-by-letter with y before x.
/// On words ending in y this agrees with the lexicographic order of the
/// corresponding compositions, which keeps printed output stable and puts
/// e.g. xyxy before xxyy.
impl Ord for Word {
    fn cmp(&self, other: &Word) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| {
                for (a, b) in self.letters.iter().zip(other.letters.iter()) {
                    // y < x in the canonical order
                    let o = b.cmp(a);
                    if o != Ordering::Equal {
                        return o;
                    }
                }
                Ordering::Equal
            })
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Word) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// The word order from the definition of Lyndon words: compare letter by
/// letter with x < y, and a proper prefix is smaller than its extension.
pub fn word_less(a: &Word, b: &Word) -> bool {
    a.letters() < b.letters()
}

/// A word is Lyndon if it is nonempty and strictly smaller (in
/// [`word_less`] order) than every nontrivial right factor.
pub fn is_lyndon(w: &Word) -> bool {
    if w.is_unit() {
        return false;
    }
    let s = w.letters();
    (1..s.len()).all(|i| s < &s[i..])
}

/// All Lyndon words of the given weight, in increasing [`word_less`] order.
pub fn lyndon_words(degree: usize) -> Vec<Word> {
    let mut out: Vec<Word> = words_of_weight(degree).into_iter().filter(is_lyndon).collect();
    out.sort_by(|a, b| a.letters().cmp(b.letters()));
    out
}

/// All 2^n words of weight n.
pub fn words_of_weight(n: usize) -> Vec<Word> {
    let mut out = Vec::with_capacity(1 << n);
    for bits in 0u64..(1 << n) {
        let letters = (0..n)
            .map(|i| {
                if bits >> i & 1 == 1 {
                    Letter::Y
                } else {
                    Letter::X
                }
            })
            .collect();
        out.push(Word::from_letters(letters));
    }
    out
}

/// All admissible words of weight n (excluding the unit).
pub fn admissible_words_of_weight(n: usize) -> Vec<Word> {
    words_of_weight(n).into_iter().filter(|w| !w.is_unit() && w.is_admissible()).collect()
}

/// All words of weight n ending in y.
pub fn h1_words_of_weight(n: u32) -> Vec<Word> {
    compositions_of_weight(n).iter().map(Composition::to_word).collect()
}

/// A composition: a finite (possibly empty) sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn empty() -> Composition {
        Composition::default()
    }

    /// Validating constructor: every part must be ≥ 1.
    pub fn new(parts: Vec<u32>) -> Result<Composition> {
        if let Some(pos) = parts.iter().position(|&p| p == 0) {
            return Err(Error::domain(format!("composition part {} is zero", pos + 1)));
        }
        Ok(Composition { parts })
    }

    pub(crate) fn from_parts(parts: Vec<u32>) -> Composition {
        debug_assert!(parts.iter().all(|&p| p >= 1));
        Composition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Weight |I|: the sum of the parts.
    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Length ℓ(I): the number of parts.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    /// The word z_{i₁}⋯z_{i_k} = x^{i₁-1}y⋯x^{i_k-1}y.
    pub fn to_word(&self) -> Word {
        let mut letters = Vec::with_capacity(self.weight() as usize);
        for &i in &self.parts {
            letters.extend(std::iter::repeat(Letter::X).take((i - 1) as usize));
            letters.push(Letter::Y);
        }
        Word::from_letters(letters)
    }

    /// The reversed composition (i_k,…,i₁).
    pub fn reversed(&self) -> Composition {
        Composition {
            parts: self.parts.iter().rev().copied().collect(),
        }
    }

    /// Juxtaposition I ⊔ J.
    pub fn juxtapose(&self, other: &Composition) -> Composition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Composition { parts }
    }

    /// Proper partial sums {i₁, i₁+i₂, …, i₁+⋯+i_{k-1}}, the subset of
    /// {1,…,|I|-1} that identifies the composition.
    pub fn partial_sums(&self) -> Vec<u32> {
        let mut sums = Vec::new();
        let mut acc = 0u32;
        for &p in self.parts.iter().take(self.parts.len().saturating_sub(1)) {
            acc += p;
            sums.push(acc);
        }
        sums
    }

    /// Rebuild a composition of the given weight from its partial-sum set
    /// (strictly increasing, all < weight).
    pub fn from_partial_sums(sums: &[u32], weight: u32) -> Composition {
        if weight == 0 {
            return Composition::empty();
        }
        let mut parts = Vec::with_capacity(sums.len() + 1);
        let mut prev = 0u32;
        for &s in sums {
            parts.push(s - prev);
            prev = s;
        }
        parts.push(weight - prev);
        Composition { parts }
    }

    /// True when self refines other (self ⪰ other): same weight, and the
    /// partial-sum set of other is contained in that of self.  Reflexive.
    pub fn refines(&self, other: &Composition) -> bool {
        if self.weight() != other.weight() {
            return false;
        }
        let mine = self.partial_sums();
        other.partial_sums().iter().all(|s| mine.binary_search(s).is_ok())
    }

    /// All J with self ⪰ J (J obtained by combining adjacent parts),
    /// including self; there are 2^{ℓ(I)-1} of them.
    pub fn coarsenings(&self) -> Vec<Composition> {
        let sums = self.partial_sums();
        let w = self.weight();
        let n = sums.len();
        let mut out = Vec::with_capacity(1 << n);
        for mask in 0u64..(1 << n) {
            let subset: Vec<u32> = (0..n).filter(|&i| mask >> i & 1 == 1).map(|i| sums[i]).collect();
            out.push(Composition::from_partial_sums(&subset, w));
        }
        out
    }

    /// All J with J ⪰ self (J obtained by splitting parts); there are
    /// ∏ 2^{i_j - 1} of them.
    pub fn refinements(&self) -> Vec<Composition> {
        let mut out = vec![Composition::empty()];
        for &p in &self.parts {
            let splits = compositions_of_weight(p);
            let mut next = Vec::with_capacity(out.len() * splits.len());
            for head in &out {
                for s in &splits {
                    next.push(head.juxtapose(s));
                }
            }
            out = next;
        }
        out
    }

    /// The conjugate composition I*, whose partial-sum set is the
    /// complement of I's inside {1,…,|I|-1}.
    pub fn conjugate(&self) -> Composition {
        let w = self.weight();
        let sums = self.partial_sums();
        let complement: Vec<u32> = (1..w).filter(|s| sums.binary_search(s).is_err()).collect();
        Composition::from_partial_sums(&complement, w)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, ")")
    }
}

/// Weight first, then lexicographic on the parts; compatible with the
/// canonical word order under the composition ↔ word bijection.
impl Ord for Composition {
    fn cmp(&self, other: &Composition) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.parts.cmp(&other.parts))
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Composition) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All 2^{n-1} compositions of weight n (just the empty one for n = 0).
pub fn compositions_of_weight(n: u32) -> Vec<Composition> {
    if n == 0 {
        return vec![Composition::empty()];
    }
    let mut out = Vec::with_capacity(1 << (n - 1).min(30));
    let mut current = Vec::new();
    fn rec(remaining: u32, current: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if remaining == 0 {
            out.push(Composition::from_parts(current.clone()));
            return;
        }
        for first in 1..=remaining {
            current.push(first);
            rec(remaining - first, current, out);
            current.pop();
        }
    }
    rec(n, &mut current, &mut out);
    out
}
