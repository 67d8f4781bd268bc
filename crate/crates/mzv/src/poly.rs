//! Exact-rational elements of the free algebra Q<x,y> and its tensor square,
//! together with the linear, multiplicative and derivation operators built
//! from letter images.

use crate::word::{Letter, Word};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

/// Exact rational scalar used everywhere in the symbolic layer.
pub type Rat = BigRational;

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational n/d.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// A finite rational linear combination of words; zero coefficients are
/// never stored.  Terms iterate in the canonical graded order of [`Word`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NCPoly {
    terms: BTreeMap<Word, Rat>,
}

impl NCPoly {
    pub fn zero() -> NCPoly {
        NCPoly::default()
    }

    /// The unit word with coefficient 1.
    pub fn one() -> NCPoly {
        NCPoly::from_word(Word::unit())
    }

    pub fn from_word(w: Word) -> NCPoly {
        NCPoly::from_term(w, Rat::one())
    }

    pub fn from_term(w: Word, c: Rat) -> NCPoly {
        let mut p = NCPoly::zero();
        p.add_term(w, c);
        p
    }

    pub fn x() -> NCPoly {
        NCPoly::from_word(Word::from_letters(vec![Letter::X]))
    }

    pub fn y() -> NCPoly {
        NCPoly::from_word(Word::from_letters(vec![Letter::Y]))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, w: &Word) -> Rat {
        self.terms.get(w).cloned().unwrap_or_else(Rat::zero)
    }

    /// Add `c`·`w`, dropping the term if the sum cancels.
    pub fn add_term(&mut self, w: Word, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &NCPoly) {
        for (w, c) in other.terms() {
            self.add_term(w.clone(), c.clone());
        }
    }

    pub fn sub_assign(&mut self, other: &NCPoly) {
        for (w, c) in other.terms() {
            self.add_term(w.clone(), -c.clone());
        }
    }

    pub fn scale(&self, c: &Rat) -> NCPoly {
        if c.is_zero() {
            return NCPoly::zero();
        }
        NCPoly {
            terms: self.terms.iter().map(|(w, k)| (w.clone(), k * c)).collect(),
        }
    }

    /// The concatenation (noncommutative) product, extended bilinearly.
    pub fn concat(&self, other: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w1, c1) in self.terms() {
            for (w2, c2) in other.terms() {
                out.add_term(w1.concat(w2), c1 * c2);
            }
        }
        out
    }

    /// Left-multiply every term by a word.
    pub fn concat_word_left(&self, w: &Word) -> NCPoly {
        NCPoly {
            terms: self.terms.iter().map(|(v, c)| (w.concat(v), c.clone())).collect(),
        }
    }

    /// Right-multiply every term by a word.
    pub fn concat_word_right(&self, w: &Word) -> NCPoly {
        NCPoly {
            terms: self.terms.iter().map(|(v, c)| (v.concat(w), c.clone())).collect(),
        }
    }

    /// Linear extension of the word-level τ (an antiautomorphism).
    pub fn tau(&self) -> NCPoly {
        NCPoly {
            terms: self.terms.iter().map(|(w, c)| (w.tau(), c.clone())).collect(),
        }
    }

    /// True when every support word ends in y or is the unit (element of ℍ¹).
    pub fn in_h1(&self) -> bool {
        self.terms.keys().all(Word::ends_in_y)
    }

    /// True when every support word is admissible (element of ℍ⁰).
    pub fn in_h0(&self) -> bool {
        self.terms.keys().all(Word::is_admissible)
    }

    pub fn max_weight(&self) -> usize {
        self.terms.keys().map(Word::weight).max().unwrap_or(0)
    }

    /// Weight of the terms if homogeneous (the zero polynomial counts as
    /// homogeneous of any weight and reports None).
    pub fn homogeneous_weight(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(Word::weight);
        let first = it.next()?;
        it.all(|w| w == first).then_some(first)
    }

    /// The part of the polynomial of the given weight.
    pub fn graded_component(&self, weight: usize) -> NCPoly {
        NCPoly {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.weight() == weight)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// (x + y)^n expanded: the sum of all words of weight n.
    pub fn sum_letters_power(n: usize) -> NCPoly {
        let mut out = NCPoly::zero();
        for w in crate::word::words_of_weight(n) {
            out.add_term(w, Rat::one());
        }
        out
    }
}

impl Add for &NCPoly {
    type Output = NCPoly;
    fn add(self, other: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }
}

impl Sub for &NCPoly {
    type Output = NCPoly;
    fn sub(self, other: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        out.sub_assign(other);
        out
    }
}

impl Neg for &NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        NCPoly {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c.clone())).collect(),
        }
    }
}

impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            let sign = c.is_negative();
            if i == 0 {
                if sign {
                    write!(f, "-")?;
                }
            } else if sign {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if w.is_unit() {
                write!(f, "{}", mag)?;
            } else if mag.is_one() {
                write!(f, "{}", w)?;
            } else {
                write!(f, "{}*{}", mag, w)?;
            }
        }
        Ok(())
    }
}

/// The algebra endomorphism determined by images of the two letters.
#[derive(Clone, Debug)]
pub struct AlgebraHom {
    image_x: NCPoly,
    image_y: NCPoly,
}

impl AlgebraHom {
    pub fn new(image_x: NCPoly, image_y: NCPoly) -> AlgebraHom {
        AlgebraHom { image_x, image_y }
    }

    fn image(&self, a: Letter) -> &NCPoly {
        match a {
            Letter::X => &self.image_x,
            Letter::Y => &self.image_y,
        }
    }

    pub fn apply(&self, p: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w, c) in p.terms() {
            let mut prod = NCPoly::one();
            for &a in w.letters() {
                prod = prod.concat(self.image(a));
            }
            out.add_assign(&prod.scale(c));
        }
        out
    }
}

/// The involution ψ with ψ(x) = x + y, ψ(y) = -y.
pub fn psi_hom() -> AlgebraHom {
    AlgebraHom::new(&NCPoly::x() + &NCPoly::y(), -&NCPoly::y())
}

/// A derivation of Q<x,y> determined by letter images, extended to words by
/// the Leibniz rule; kills the unit word.
#[derive(Clone, Debug)]
pub struct Derivation {
    dx: NCPoly,
    dy: NCPoly,
}

impl Derivation {
    pub fn new(dx: NCPoly, dy: NCPoly) -> Derivation {
        Derivation { dx, dy }
    }

    fn image(&self, a: Letter) -> &NCPoly {
        match a {
            Letter::X => &self.dx,
            Letter::Y => &self.dy,
        }
    }

    /// The amount by which the derivation raises weight, when both images
    /// are homogeneous of the same degree (zero images are unconstrained).
    pub fn weight_raise(&self) -> Option<usize> {
        let dx = self.dx.homogeneous_weight();
        let dy = self.dy.homogeneous_weight();
        match (dx, dy) {
            (Some(a), Some(b)) if a == b => Some(a - 1),
            (Some(a), None) => Some(a - 1),
            (None, Some(b)) => Some(b - 1),
            _ => None,
        }
    }

    pub fn apply(&self, p: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w, c) in p.terms() {
            let letters = w.letters();
            for i in 0..letters.len() {
                let prefix = Word::from_letters(letters[..i].to_vec());
                let suffix = Word::from_letters(letters[i + 1..].to_vec());
                let mid = self.image(letters[i]);
                out.add_assign(
                    &mid.concat_word_left(&prefix).concat_word_right(&suffix).scale(c),
                );
            }
        }
        out
    }
}

/// Commutator [f, g]: p ↦ f(g(p)) - g(f(p)).
pub fn commutator<'a>(
    f: &'a dyn Fn(&NCPoly) -> NCPoly,
    g: &'a dyn Fn(&NCPoly) -> NCPoly,
) -> impl Fn(&NCPoly) -> NCPoly + 'a {
    move |p| &f(&g(p)) - &g(&f(p))
}

/// A finite rational linear combination of word pairs a ⊗ b, with the
/// two-sided module actions c·(a⊗b) = ca⊗b and (a⊗b)·c = a⊗bc.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TensorPoly {
    terms: BTreeMap<(Word, Word), Rat>,
}

impl TensorPoly {
    pub fn zero() -> TensorPoly {
        TensorPoly::default()
    }

    pub fn from_pair(a: Word, b: Word) -> TensorPoly {
        let mut t = TensorPoly::zero();
        t.add_term(a, b, Rat::one());
        t
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Word, Word), &Rat)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, a: Word, b: Word, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((a, b)) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &TensorPoly) {
        for ((a, b), c) in other.terms() {
            self.add_term(a.clone(), b.clone(), c.clone());
        }
    }

    pub fn scale(&self, c: &Rat) -> TensorPoly {
        if c.is_zero() {
            return TensorPoly::zero();
        }
        TensorPoly {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Left action w·(a⊗b) = wa⊗b.
    pub fn left_mul(&self, w: &Word) -> TensorPoly {
        TensorPoly {
            terms: self
                .terms
                .iter()
                .map(|((a, b), c)| ((w.concat(a), b.clone()), c.clone()))
                .collect(),
        }
    }

    /// Right action (a⊗b)·w = a⊗bw.
    pub fn right_mul(&self, w: &Word) -> TensorPoly {
        TensorPoly {
            terms: self
                .terms
                .iter()
                .map(|((a, b), c)| ((a.clone(), b.concat(w)), c.clone()))
                .collect(),
        }
    }

    /// Left action by a polynomial.
    pub fn left_mul_poly(&self, p: &NCPoly) -> TensorPoly {
        let mut out = TensorPoly::zero();
        for (w, c) in p.terms() {
            out.add_assign(&self.left_mul(w).scale(c));
        }
        out
    }

    /// The twisted multiplication a ⊗ b ↦ ba.
    pub fn mu_tilde(&self) -> NCPoly {
        let mut out = NCPoly::zero();
        for ((a, b), c) in self.terms() {
            out.add_term(b.concat(a), c.clone());
        }
        out
    }
}

impl Sub for &TensorPoly {
    type Output = TensorPoly;
    fn sub(self, other: &TensorPoly) -> TensorPoly {
        let mut out = self.clone();
        for ((a, b), c) in other.terms() {
            out.add_term(a.clone(), b.clone(), -c.clone());
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_ncpoly;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn p(s: &str) -> NCPoly {
        parse_ncpoly(s).unwrap()
    }

    pub(crate) fn random_word(rng: &mut StdRng, max_weight: usize) -> Word {
        let n = rng.gen_range(0..=max_weight);
        Word::from_letters(
            (0..n)
                .map(|_| if rng.gen_bool(0.5) { Letter::X } else { Letter::Y })
                .collect(),
        )
    }

    pub(crate) fn random_poly(rng: &mut StdRng, max_weight: usize, terms: usize) -> NCPoly {
        let mut out = NCPoly::zero();
        for _ in 0..terms {
            let c = rat_int(rng.gen_range(-3..=3));
            out.add_term(random_word(rng, max_weight), c);
        }
        out
    }

    #[test]
    fn concat_examples() {
        assert_eq!(p("x + y").concat(&p("y")), p("xy + yy"));
        assert_eq!(p("3*xy").scale(&rat_int(0)), NCPoly::zero());
        let a = NCPoly::x().concat(&NCPoly::y()).concat(&NCPoly::x());
        let b = NCPoly::x().concat(&NCPoly::y().concat(&NCPoly::x()));
        assert_eq!(a, b);
        assert_eq!(a, p("xyx"));
    }

    #[test]
    fn concat_associative_unital() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..50 {
            let a = random_poly(&mut rng, 3, 3);
            let b = random_poly(&mut rng, 2, 2);
            let c = random_poly(&mut rng, 2, 2);
            assert_eq!(a.concat(&b).concat(&c), a.concat(&b.concat(&c)));
            assert_eq!(a.concat(&NCPoly::one()), a);
            assert_eq!(NCPoly::one().concat(&a), a);
        }
    }

    #[test]
    fn psi_golden() {
        let psi = psi_hom();
        assert_eq!(
            psi.apply(&p("x^2y^3")),
            p("-x^2y^3 - xy^4 - yxy^3 - y^5")
        );
        let id = AlgebraHom::new(NCPoly::x(), NCPoly::y());
        assert_eq!(id.apply(&p("xyx")), p("xyx"));
        let w = p("xy^2");
        assert_eq!(psi.apply(&psi.apply(&w)), w);
    }

    #[test]
    fn hom_respects_products() {
        let mut rng = StdRng::seed_from_u64(11);
        let psi = psi_hom();
        for _ in 0..30 {
            let a = random_poly(&mut rng, 3, 3);
            let b = random_poly(&mut rng, 3, 3);
            assert_eq!(psi.apply(&a.concat(&b)), psi.apply(&a).concat(&psi.apply(&b)));
        }
    }

    #[test]
    fn derivation_examples() {
        let d = Derivation::new(NCPoly::zero(), p("xy"));
        assert_eq!(d.apply(&p("xy")), p("x^2y"));
        assert_eq!(d.apply(&NCPoly::one()), NCPoly::zero());
        let d2 = Derivation::new(p("x^2y + xy^2"), p("-x^2y - xy^2"));
        assert_eq!(d2.apply(&NCPoly::x()), p("x^2y + xy^2"));
    }

    #[test]
    fn derivation_leibniz() {
        let mut rng = StdRng::seed_from_u64(13);
        let d = Derivation::new(p("xy"), p("yx - y^2"));
        for _ in 0..30 {
            let a = random_poly(&mut rng, 3, 3);
            let b = random_poly(&mut rng, 3, 3);
            let lhs = d.apply(&a.concat(&b));
            let rhs = &d.apply(&a).concat(&b) + &a.concat(&d.apply(&b));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn tau_linear() {
        assert_eq!(p("x^2y + xy").tau(), p("xy^2 + xy"));
        assert_eq!(NCPoly::zero().tau(), NCPoly::zero());
        assert_eq!(p("3*xxy").tau(), p("3*xyy"));
    }

    #[test]
    fn commutator_examples() {
        let d = Derivation::new(NCPoly::zero(), p("xy"));
        let dbar = |q: &NCPoly| d.apply(&q.tau()).tau();
        let dfun = |q: &NCPoly| d.apply(q);
        let comm = commutator(&dbar, &dfun);
        // [Dbar, D](y) = Dbar(xy) = xy^2
        assert_eq!(comm(&NCPoly::y()), p("xy^2"));
        let self_comm = commutator(&dfun, &dfun);
        assert_eq!(self_comm(&p("xy + yx")), NCPoly::zero());
        // [D_1, D_2](x) = 0: both derivations kill x
        let d2 = Derivation::new(NCPoly::zero(), p("x^2y"));
        let d2fun = |q: &NCPoly| d2.apply(q);
        let comm12 = commutator(&dfun, &d2fun);
        assert_eq!(comm12(&NCPoly::x()), NCPoly::zero());
    }

    #[test]
    fn tensor_bimodule() {
        let mut rng = StdRng::seed_from_u64(17);
        for _ in 0..30 {
            let a = random_word(&mut rng, 3);
            let b = random_word(&mut rng, 3);
            let c = random_word(&mut rng, 3);
            let d = random_word(&mut rng, 3);
            let t = TensorPoly::from_pair(b.clone(), c.clone());
            let left_first = t.left_mul(&a).right_mul(&d);
            let right_first = t.right_mul(&d).left_mul(&a);
            assert_eq!(left_first, right_first);
            assert_eq!(
                left_first.mu_tilde(),
                NCPoly::from_word(c.concat(&d).concat(&a).concat(&b))
            );
        }
    }

    #[test]
    fn display_canonical_order() {
        // canonical order: weight first, then y-before-x lexicographically
        let q = p("4*xxyy + 2*xyxy");
        assert_eq!(q.to_string(), "2*xyxy + 4*xxyy");
        assert_eq!(p("0").to_string(), "0");
        assert_eq!(p("1").to_string(), "1");
        assert_eq!(p("xy - 1/2*y").to_string(), "-1/2*y + xy");
    }

    #[test]
    fn weight_raise() {
        let d = Derivation::new(NCPoly::zero(), p("x^2y"));
        assert_eq!(d.weight_raise(), Some(2));
        let mixed = Derivation::new(p("x"), p("xy"));
        assert_eq!(mixed.weight_raise(), None);
    }
}
