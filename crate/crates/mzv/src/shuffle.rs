//! The shuffle product on Q<x,y>: the unit law together with the recursion
//! a·w₁ ⧢ b·w₂ = a(w₁ ⧢ b·w₂) + b(a·w₁ ⧢ w₂), extended bilinearly.

use crate::poly::{rat_int, NCPoly};
use crate::word::{Letter, Word};
use num_traits::One;
use std::collections::HashMap;

/// Shuffle product of two polynomials.
pub fn shuffle(p: &NCPoly, q: &NCPoly) -> NCPoly {
    let mut memo = HashMap::new();
    let mut out = NCPoly::zero();
    for (w1, c1) in p.terms() {
        for (w2, c2) in q.terms() {
            out.add_assign(&shuffle_words(w1, w2, &mut memo).scale(&(c1 * c2)));
        }
    }
    out
}

fn shuffle_words(w1: &Word, w2: &Word, memo: &mut HashMap<(Word, Word), NCPoly>) -> NCPoly {
    if w1.is_unit() {
        return NCPoly::from_word(w2.clone());
    }
    if w2.is_unit() {
        return NCPoly::from_word(w1.clone());
    }
    // the product is symmetric; normalize the memo key
    let key = if w1 <= w2 {
        (w1.clone(), w2.clone())
    } else {
        (w2.clone(), w1.clone())
    };
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }
    let (a, b) = (key.0.letters()[0], key.1.letters()[0]);
    let t1 = Word::from_letters(key.0.letters()[1..].to_vec());
    let t2 = Word::from_letters(key.1.letters()[1..].to_vec());
    let left = shuffle_words(&t1, &key.1, memo).concat_word_left(&Word::from_letters(vec![a]));
    let right = shuffle_words(&key.0, &t2, memo).concat_word_left(&Word::from_letters(vec![b]));
    let result = &left + &right;
    memo.insert(key, result.clone());
    result
}

/// Check of the mirrored recursion w₁a ⧢ w₂b = (w₁ ⧢ w₂b)a + (w₁a ⧢ w₂)b,
/// evaluated through the main shuffle; used as a test oracle.
pub fn right_recursion_check(w1: &Word, a: Letter, w2: &Word, b: Letter) -> bool {
    let wa = w1.concat(&Word::from_letters(vec![a]));
    let wb = w2.concat(&Word::from_letters(vec![b]));
    let lhs = shuffle(&NCPoly::from_word(wa.clone()), &NCPoly::from_word(wb.clone()));
    let first = shuffle(&NCPoly::from_word(w1.clone()), &NCPoly::from_word(wb))
        .concat_word_right(&Word::from_letters(vec![a]));
    let second = shuffle(&NCPoly::from_word(wa), &NCPoly::from_word(w2.clone()))
        .concat_word_right(&Word::from_letters(vec![b]));
    lhs == &first + &second
}

/// Rank of the set of products of multisets of Lyndon words of the given
/// total degree, under an arbitrary commutative product.  Freeness over the
/// Lyndon words means the rank equals 2^d, the dimension of the graded
/// component.
pub fn lyndon_monomial_rank(d: usize, mul: impl Fn(&NCPoly, &NCPoly) -> NCPoly) -> usize {
    let gens: Vec<Word> = (1..=d).flat_map(crate::word::lyndon_words).collect();
    let mut monomials: Vec<NCPoly> = Vec::new();
    fn rec(
        gens: &[Word],
        from: usize,
        remaining: usize,
        acc: &NCPoly,
        mul: &impl Fn(&NCPoly, &NCPoly) -> NCPoly,
        out: &mut Vec<NCPoly>,
    ) {
        if remaining == 0 {
            out.push(acc.clone());
            return;
        }
        for i in from..gens.len() {
            let gw = gens[i].weight();
            if gw <= remaining {
                let next = mul(acc, &NCPoly::from_word(gens[i].clone()));
                rec(gens, i, remaining - gw, &next, mul, out);
            }
        }
    }
    rec(&gens, 0, d, &NCPoly::one(), &mul, &mut monomials);
    crate::linalg::rank_of_polys(&monomials)
}

/// Residual of the shuffle convolution identity
/// Σ_{r=-n}^{n} (-1)^r (xy)^{n-r} ⧢ (xy)^{n+r} = 4^n (x²y²)^n;
/// the contract is the zero polynomial.
pub fn shuffle_convolution_residual(n: u32) -> NCPoly {
    fn xy_pow(k: i64) -> Word {
        let mut letters = Vec::new();
        for _ in 0..k {
            letters.push(Letter::X);
            letters.push(Letter::Y);
        }
        Word::from_letters(letters)
    }
    fn xxyy_pow(k: u32) -> Word {
        let mut letters = Vec::new();
        for _ in 0..k {
            letters.extend([Letter::X, Letter::X, Letter::Y, Letter::Y]);
        }
        Word::from_letters(letters)
    }
    let n = n as i64;
    let mut lhs = NCPoly::zero();
    for r in -n..=n {
        let term = shuffle(
            &NCPoly::from_word(xy_pow(n - r)),
            &NCPoly::from_word(xy_pow(n + r)),
        );
        let sign = if r.rem_euclid(2) == 0 { 1 } else { -1 };
        lhs.add_assign(&term.scale(&rat_int(sign)));
    }
    let mut four_n = num_rational::BigRational::one();
    for _ in 0..n {
        four_n *= rat_int(4);
    }
    let rhs = NCPoly::from_term(xxyy_pow(n as u32), four_n);
    &lhs - &rhs
}
