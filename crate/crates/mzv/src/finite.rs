//! Finite multiple harmonic sums
//!
//!   A_I(n) = Σ_{n ≥ n₁ > … > n_k ≥ 1} 1/(n₁^{i₁}⋯n_k^{i_k})   (strict)
//!   S_I(n) = Σ_{n ≥ n₁ ≥ … ≥ n_k ≥ 1} 1/(n₁^{i₁}⋯n_k^{i_k})   (weak)
//!
//! evaluated exactly over the rationals, in double precision, or in Z/pZ,
//! all through one nesting recursion parameterized by the coefficient
//! field.  Also: the partial-sum and signed-binomial-transform operators on
//! sequences, symmetric-sum expansions over set partitions, and the
//! evaluation homomorphism sending a word ending in y to A_I(n).

use crate::poly::{rat_int, NCPoly, Rat};
use crate::word::Composition;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cell::RefCell;
use std::rc::Rc;

/// A coefficient field for the nested-sum recursion.
pub trait FieldCtx {
    type El: Clone;
    fn zero(&self) -> Self::El;
    fn one(&self) -> Self::El;
    fn add(&self, a: &Self::El, b: &Self::El) -> Self::El;
    fn mul(&self, a: &Self::El, b: &Self::El) -> Self::El;
    /// 1/m^i for m ≥ 1.
    fn inv_power(&self, m: u64, i: u32) -> Self::El;
}

/// Exact rationals.
pub struct RatCtx;

impl FieldCtx for RatCtx {
    type El = Rat;
    fn zero(&self) -> Rat {
        Rat::zero()
    }
    fn one(&self) -> Rat {
        Rat::one()
    }
    fn add(&self, a: &Rat, b: &Rat) -> Rat {
        a + b
    }
    fn mul(&self, a: &Rat, b: &Rat) -> Rat {
        a * b
    }
    fn inv_power(&self, m: u64, i: u32) -> Rat {
        Rat::new(BigInt::one(), BigInt::from(m).pow(i))
    }
}

/// Double precision, for the numeric evaluator.
pub struct F64Ctx;

impl FieldCtx for F64Ctx {
    type El = f64;
    fn zero(&self) -> f64 {
        0.0
    }
    fn one(&self) -> f64 {
        1.0
    }
    fn add(&self, a: &f64, b: &f64) -> f64 {
        a + b
    }
    fn mul(&self, a: &f64, b: &f64) -> f64 {
        a * b
    }
    fn inv_power(&self, m: u64, i: u32) -> f64 {
        (m as f64).powi(-(i as i32))
    }
}

/// The prime field Z/pZ; the constructor checks primality.
pub struct ModCtx {
    p: u64,
}

impl ModCtx {
    pub fn new(p: u64) -> Result<ModCtx> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(ModCtx { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(a % self.p != 0);
        self.pow(a, self.p - 2)
    }

    /// Reduce a rational with denominator coprime to p.
    pub fn reduce(&self, r: &Rat) -> Result<u64> {
        let p = BigInt::from(self.p);
        let den = r.denom().mod_floor_big(&p);
        if den.is_zero() {
            return Err(Error::DenominatorDivisible {
                coeff: r.to_string(),
                p: self.p,
            });
        }
        let num = r.numer().mod_floor_big(&p);
        let num = num.to_u64().expect("residue fits in u64");
        let den = den.to_u64().expect("residue fits in u64");
        Ok(num * self.inv(den) % self.p)
    }
}

trait ModFloorBig {
    fn mod_floor_big(&self, p: &BigInt) -> BigInt;
}

impl ModFloorBig for BigInt {
    fn mod_floor_big(&self, p: &BigInt) -> BigInt {
        let r = self % p;
        if r.is_negative() {
            r + p
        } else {
            r
        }
    }
}

impl FieldCtx for ModCtx {
    type El = u64;
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn inv_power(&self, m: u64, i: u32) -> u64 {
        self.pow(self.inv(m % self.p), i as u64)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    n >= 2
}

pub fn primes_up_to(n: u64) -> Vec<u64> {
    (2..=n).filter(|&p| is_prime(p)).collect()
}

/// Advance the level state of the nested sum from n-1 to n.
/// `levels[j]` holds the sum for the suffix `parts[j..]` with upper bound
/// at the current step; `levels[k]` stays 1.
fn advance<C: FieldCtx>(ctx: &C, parts: &[u32], strict: bool, levels: &mut [C::El], n: u64) {
    let k = parts.len();
    if strict {
        // level j at n uses level j+1 at n-1: update top-down
        for j in 0..k {
            let term = ctx.mul(&ctx.inv_power(n, parts[j]), &levels[j + 1]);
            levels[j] = ctx.add(&levels[j], &term);
        }
    } else {
        // level j at n uses level j+1 at n: update bottom-up
        for j in (0..k).rev() {
            let term = ctx.mul(&ctx.inv_power(n, parts[j]), &levels[j + 1]);
            levels[j] = ctx.add(&levels[j], &term);
        }
    }
}

fn initial_levels<C: FieldCtx>(ctx: &C, k: usize) -> Vec<C::El> {
    let mut levels = vec![ctx.zero(); k + 1];
    levels[k] = ctx.one();
    levels
}

/// The nested sum over the given field; `strict` selects A over S.
pub fn nested_sum<C: FieldCtx>(ctx: &C, parts: &[u32], n: u64, strict: bool) -> C::El {
    let mut levels = initial_levels(ctx, parts.len());
    for m in 1..=n {
        advance(ctx, parts, strict, &mut levels, m);
    }
    levels[0].clone()
}

/// Stream the nested sum in double precision, reporting the running value
/// at each step; stops when the visitor returns false.
pub fn nested_sum_stream(parts: &[u32], strict: bool, mut visit: impl FnMut(u64, f64) -> bool) {
    let ctx = F64Ctx;
    let mut levels = initial_levels(&ctx, parts.len());
    let mut n = 0u64;
    loop {
        n += 1;
        advance(&ctx, parts, strict, &mut levels, n);
        if !visit(n, levels[0]) {
            return;
        }
    }
}

/// A_I(n), exactly.
pub fn a_sum(comp: &Composition, n: u64) -> Rat {
    nested_sum(&RatCtx, comp.parts(), n, true)
}

/// S_I(n), exactly.
pub fn s_sum(comp: &Composition, n: u64) -> Rat {
    nested_sum(&RatCtx, comp.parts(), n, false)
}

/// Residual of S_I(n) = Σ_{I ⪰ J} A_J(n); the contract is zero.
pub fn refine_expand_residual(comp: &Composition, n: u64) -> Rat {
    let mut rhs = Rat::zero();
    for j in comp.coarsenings() {
        rhs += a_sum(&j, n);
    }
    s_sum(comp, n) - rhs
}

/// A_I(p-1) in Z/pZ.
pub fn a_modp(comp: &Composition, p: u64) -> Result<u64> {
    let ctx = ModCtx::new(p)?;
    Ok(nested_sum(&ctx, comp.parts(), p - 1, true))
}

/// S_I(p-1) in Z/pZ.
pub fn s_modp(comp: &Composition, p: u64) -> Result<u64> {
    let ctx = ModCtx::new(p)?;
    Ok(nested_sum(&ctx, comp.parts(), p - 1, false))
}

/// The evaluation sending a word ending in y to A_{I(w)}(n), extended
/// linearly; a homomorphism from the harmonic algebra to the rationals.
pub fn evaluate_harmonic(p: &NCPoly, n: u64) -> Result<Rat> {
    let mut out = Rat::zero();
    for (w, c) in p.terms() {
        let comp = w.to_composition()?;
        out += c * a_sum(&comp, n);
    }
    Ok(out)
}

/// The same evaluation in Z/pZ at n = p-1; coefficient denominators must
/// be coprime to p.
pub fn chi_p(poly: &NCPoly, p: u64) -> Result<u64> {
    let ctx = ModCtx::new(p)?;
    let mut out = 0u64;
    for (w, c) in poly.terms() {
        let comp = w.to_composition()?;
        let coeff = ctx.reduce(c)?;
        let value = nested_sum(&ctx, comp.parts(), p - 1, true);
        out = (out + coeff * value) % p;
    }
    Ok(out)
}

/// A memoized rational-valued sequence indexed from n = 0.
#[derive(Clone)]
pub struct RationalSeq {
    inner: Rc<SeqInner>,
}

struct SeqInner {
    f: Box<dyn Fn(u64) -> Rat>,
    memo: RefCell<Vec<Option<Rat>>>,
}

impl RationalSeq {
    pub fn new(f: impl Fn(u64) -> Rat + 'static) -> RationalSeq {
        RationalSeq {
            inner: Rc::new(SeqInner {
                f: Box::new(f),
                memo: RefCell::new(Vec::new()),
            }),
        }
    }

    /// The sequence n ↦ A_I(n).
    pub fn strict_sums(comp: Composition) -> RationalSeq {
        RationalSeq::new(move |n| a_sum(&comp, n))
    }

    /// The sequence n ↦ S_I(n).
    pub fn weak_sums(comp: Composition) -> RationalSeq {
        RationalSeq::new(move |n| s_sum(&comp, n))
    }

    pub fn at(&self, n: u64) -> Rat {
        {
            let memo = self.inner.memo.borrow();
            if let Some(Some(v)) = memo.get(n as usize) {
                return v.clone();
            }
        }
        let v = (self.inner.f)(n);
        let mut memo = self.inner.memo.borrow_mut();
        if memo.len() <= n as usize {
            memo.resize(n as usize + 1, None);
        }
        memo[n as usize] = Some(v.clone());
        v
    }

    /// The partial-sum operator: n ↦ Σ_{i=0}^n a(i).
    pub fn partial_sums(&self) -> RationalSeq {
        let base = self.clone();
        RationalSeq::new(move |n| {
            let mut acc = Rat::zero();
            for i in 0..=n {
                acc += base.at(i);
            }
            acc
        })
    }

    /// The signed binomial transform: n ↦ Σ_{i=0}^n C(n,i)(-1)^i a(i).
    pub fn signed_binomial_transform(&self) -> RationalSeq {
        let base = self.clone();
        RationalSeq::new(move |n| {
            let mut acc = Rat::zero();
            let mut binom = BigInt::one();
            for i in 0..=n {
                let term = Rat::from_integer(binom.clone()) * base.at(i);
                if i % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
                // C(n, i+1) = C(n, i)·(n-i)/(i+1), exactly
                binom = binom * BigInt::from(n - i) / BigInt::from(i + 1);
            }
            acc
        })
    }

    /// Inverse of the partial-sum operator: n ↦ a(n) - a(n-1), with
    /// a(-1) treated as 0.
    pub fn difference(&self) -> RationalSeq {
        let base = self.clone();
        RationalSeq::new(move |n| {
            if n == 0 {
                base.at(0)
            } else {
                base.at(n) - base.at(n - 1)
            }
        })
    }
}

/// All set partitions of {0,…,k-1}, enumerated by restricted growth
/// strings; the Bell numbers cap the count (k ≤ 8 stays at 4140).
pub fn set_partitions(k: usize) -> Vec<Vec<Vec<usize>>> {
    assert!(k <= 8, "set-partition enumeration is capped at 8 elements");
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    fn rec(i: usize, k: usize, blocks: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if i == k {
            out.push(blocks.clone());
            return;
        }
        for b in 0..blocks.len() {
            blocks[b].push(i);
            rec(i + 1, k, blocks, out);
            blocks[b].pop();
        }
        blocks.push(vec![i]);
        rec(i + 1, k, blocks, out);
        blocks.pop();
    }
    rec(0, k, &mut Vec::new(), &mut out);
    out
}

/// All permutations of 0..k.
pub fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..k).collect();
    fn heap(n: usize, items: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n <= 1 {
            out.push(items.clone());
            return;
        }
        for i in 0..n {
            heap(n - 1, items, out);
            if n % 2 == 0 {
                items.swap(i, n - 1);
            } else {
                items.swap(0, n - 1);
            }
        }
    }
    heap(k, &mut items, &mut out);
    out
}

/// Which of the two symmetric-sum expansions to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SumVariant {
    /// Strict sums A_I.
    Strict,
    /// Weak sums S_I.
    Weak,
}

/// Both sides of the symmetric-sum formula: the left side sums S_{σ·I}(n)
/// (or A) over all permutations σ; the right side sums over set partitions
/// Π of the positions, with coefficient ∏(card P_s - 1)! for the weak sums
/// and the extra sign (-1)^{k-l} for the strict sums.
pub fn symmetric_sum_sides(comp: &Composition, n: u64, variant: SumVariant) -> (Rat, Rat) {
    let parts = comp.parts();
    let k = parts.len();
    let mut lhs = Rat::zero();
    for perm in permutations(k) {
        let arranged: Vec<u32> = perm.iter().map(|&i| parts[i]).collect();
        let arranged = Composition::new(arranged).unwrap();
        lhs += match variant {
            SumVariant::Strict => a_sum(&arranged, n),
            SumVariant::Weak => s_sum(&arranged, n),
        };
    }
    let mut rhs = Rat::zero();
    for partition in set_partitions(k) {
        let l = partition.len();
        let mut coeff = Rat::one();
        let mut value = Rat::one();
        for block in &partition {
            let mut fact = Rat::one();
            for i in 1..block.len() {
                fact *= rat_int(i as i64);
            }
            coeff *= fact;
            let p_s: u32 = block.iter().map(|&i| parts[i]).sum();
            value *= s_sum(&Composition::new(vec![p_s]).unwrap(), n);
        }
        if variant == SumVariant::Strict && (k - l) % 2 == 1 {
            coeff = -coeff;
        }
        rhs += coeff * value;
    }
    (lhs, rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;
    use crate::qsym::{convert_basis, star, Basis, QSymExpr};
    use crate::text::{parse_composition, parse_ncpoly};
    use crate::word::{compositions_of_weight, h1_words_of_weight};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn c(s: &str) -> Composition {
        parse_composition(s).unwrap()
    }

    /// Brute-force nested loops, the independent oracle for the recursion.
    fn brute_force(parts: &[u32], n: u64, strict: bool) -> Rat {
        fn rec(parts: &[u32], upper: u64, strict: bool) -> Rat {
            if parts.is_empty() {
                return Rat::one();
            }
            let mut acc = Rat::zero();
            for m in 1..=upper {
                let inner_upper = if strict { m - 1 } else { m };
                acc += RatCtx.inv_power(m, parts[0]) * rec(&parts[1..], inner_upper, strict);
            }
            acc
        }
        rec(parts, n, strict)
    }

    #[test]
    fn sum_examples() {
        assert_eq!(a_sum(&c("(1)"), 3), rat(11, 6));
        assert_eq!(a_sum(&c("(2,1)"), 2), rat(1, 4));
        assert_eq!(a_sum(&c("(1,1,1)"), 2), rat(0, 1));
        assert_eq!(s_sum(&c("(1)"), 4), rat(25, 12));
        assert_eq!(a_sum(&Composition::empty(), 5), rat(1, 1));
        assert_eq!(a_sum(&c("(2)"), 0), rat(0, 1));
    }

    #[test]
    fn recursion_matches_brute_force() {
        for parts in [vec![1], vec![2], vec![1, 1], vec![2, 1], vec![1, 2], vec![3, 1, 2]] {
            for n in 0..=6 {
                for strict in [true, false] {
                    let comp = Composition::new(parts.clone()).unwrap();
                    let fast = nested_sum(&RatCtx, comp.parts(), n, strict);
                    assert_eq!(fast, brute_force(&parts, n, strict), "{:?} at {}", parts, n);
                }
            }
        }
    }

    #[test]
    fn refine_expansion() {
        assert_eq!(refine_expand_residual(&c("(4,2,1)"), 6), Rat::zero());
        for n in 0..=8 {
            assert_eq!(refine_expand_residual(&c("(3)"), n), Rat::zero());
            assert_eq!(refine_expand_residual(&c("(1,1)"), n), Rat::zero());
        }
        // full sweep: weight ≤ 6, n ≤ 10
        for weight in 1..=6u32 {
            for comp in compositions_of_weight(weight) {
                for n in 0..=10 {
                    assert_eq!(
                        refine_expand_residual(&comp, n),
                        Rat::zero(),
                        "I = {}, n = {}",
                        comp,
                        n
                    );
                }
            }
        }
    }

    #[test]
    fn sequence_operators() {
        let ones = RationalSeq::new(|_| Rat::one());
        let nabla = ones.signed_binomial_transform();
        assert_eq!(nabla.at(0), rat(1, 1));
        for n in 1..=12 {
            assert_eq!(nabla.at(n), Rat::zero(), "alternating sum at {}", n);
        }

        let mut rng = StdRng::seed_from_u64(59);
        let values: Vec<Rat> = (0..13).map(|_| rat_int(rng.gen_range(-9..=9))).collect();
        let vals = values.clone();
        let seq = RationalSeq::new(move |n| vals[n as usize].clone());
        let round = seq.partial_sums().difference();
        for n in 0..13 {
            assert_eq!(round.at(n), values[n as usize]);
        }

        // Σ∇ S_{(1)} at 4 = -25/12
        let s1 = RationalSeq::weak_sums(c("(1)"));
        let sn = s1.signed_binomial_transform().partial_sums();
        assert_eq!(sn.at(4), rat(-25, 12));
    }

    #[test]
    fn dihedral_relations() {
        let mut rng = StdRng::seed_from_u64(61);
        let values: Vec<Rat> = (0..13).map(|_| rat(rng.gen_range(-9..=9), rng.gen_range(1..=5))).collect();
        let vals = values.clone();
        let a = RationalSeq::new(move |n| vals[n as usize].clone());
        // ∇∇ = id
        let nn = a.signed_binomial_transform().signed_binomial_transform();
        for n in 0..13 {
            assert_eq!(nn.at(n), values[n as usize]);
        }
        // Σ∇ = ∇Σ⁻¹
        let lhs = a.signed_binomial_transform().partial_sums();
        let rhs = a.difference().signed_binomial_transform();
        for n in 0..13 {
            assert_eq!(lhs.at(n), rhs.at(n));
        }
        // (Σ∇)² = id
        let twice = lhs.signed_binomial_transform().partial_sums();
        for n in 0..13 {
            assert_eq!(twice.at(n), values[n as usize]);
        }
    }

    #[test]
    fn binomial_transform_conjugates_weak_sums() {
        // Σ∇ S_I = -S_{I*} for all I of weight ≤ 5, n ≤ 12
        for weight in 1..=5u32 {
            for comp in compositions_of_weight(weight) {
                let transformed = RationalSeq::weak_sums(comp.clone())
                    .signed_binomial_transform()
                    .partial_sums();
                let conjugate = RationalSeq::weak_sums(comp.conjugate());
                for n in 0..=12 {
                    assert_eq!(
                        transformed.at(n),
                        -conjugate.at(n),
                        "I = {}, n = {}",
                        comp,
                        n
                    );
                }
            }
        }
    }

    #[test]
    fn nabla_recursion_spot_checks() {
        // ∇S_I(n) = (1/n)·∇f(n) with f = S_{(i₂,…)} when i₁ = 1 and
        // f = Σ⁻¹ S_{(i₁-1,i₂,…)} otherwise
        let cases: Vec<(Composition, RationalSeq)> = vec![
            (c("(1,2)"), RationalSeq::weak_sums(c("(2)"))),
            (c("(2,1)"), RationalSeq::weak_sums(c("(1,1)")).difference()),
            (c("(3)"), RationalSeq::weak_sums(c("(2)")).difference()),
        ];
        for (comp, f) in cases {
            let lhs = RationalSeq::weak_sums(comp.clone()).signed_binomial_transform();
            let rhs = f.signed_binomial_transform();
            for n in 1..=10 {
                assert_eq!(
                    lhs.at(n),
                    rhs.at(n) / rat_int(n as i64),
                    "I = {}, n = {}",
                    comp,
                    n
                );
            }
        }
    }

    #[test]
    fn euler_alternating_binomial() {
        // Σ_{k=1}^n (-1)^k C(n,k)/k = -Σ_{k=1}^n 1/k for n ≤ 20
        for n in 1..=20u64 {
            let mut lhs = Rat::zero();
            let mut binom = BigInt::one();
            for k in 1..=n {
                binom = binom * BigInt::from(n - k + 1) / BigInt::from(k);
                let term = Rat::from_integer(binom.clone()) / rat_int(k as i64);
                if k % 2 == 0 {
                    lhs += term;
                } else {
                    lhs -= term;
                }
            }
            assert_eq!(lhs, -s_sum(&c("(1)"), n));
        }
    }

    #[test]
    fn symmetric_sum_examples() {
        for n in 0..=6 {
            let (l, r) = symmetric_sum_sides(&c("(4)"), n, SumVariant::Weak);
            assert_eq!(l, r);
            assert_eq!(l, s_sum(&c("(4)"), n));
        }
        let (l, r) = symmetric_sum_sides(&c("(2,3)"), 5, SumVariant::Weak);
        assert_eq!(l, r);
        let expected = s_sum(&c("(2)"), 5) * s_sum(&c("(3)"), 5) + s_sum(&c("(5)"), 5);
        assert_eq!(l, expected);
        let (l, r) = symmetric_sum_sides(&c("(1,1,2)"), 5, SumVariant::Strict);
        assert_eq!(l, r);
    }

    #[test]
    fn symmetric_sum_sweep() {
        // both variants for all I of length ≤ 3, weight ≤ 6, n ≤ 8
        for weight in 1..=6u32 {
            for comp in compositions_of_weight(weight) {
                if comp.length() > 3 {
                    continue;
                }
                for n in 0..=8 {
                    for variant in [SumVariant::Strict, SumVariant::Weak] {
                        let (l, r) = symmetric_sum_sides(&comp, n, variant);
                        assert_eq!(l, r, "I = {}, n = {}, {:?}", comp, n, variant);
                    }
                }
            }
        }
    }

    #[test]
    fn evaluation_is_star_homomorphism() {
        let mut rng = StdRng::seed_from_u64(67);
        for _ in 0..40 {
            let wu = rng.gen_range(0..=5u32);
            let wv = rng.gen_range(0..=5u32);
            let cu = compositions_of_weight(wu);
            let cv = compositions_of_weight(wv);
            let u = NCPoly::from_word(cu[rng.gen_range(0..cu.len())].to_word());
            let v = NCPoly::from_word(cv[rng.gen_range(0..cv.len())].to_word());
            for n in [0u64, 1, 3, 8] {
                let product = evaluate_harmonic(&star(&u, &v), n).unwrap();
                let separate =
                    evaluate_harmonic(&u, n).unwrap() * evaluate_harmonic(&v, n).unwrap();
                assert_eq!(product, separate);
            }
        }
    }

    #[test]
    fn essential_basis_evaluates_to_weak_sums() {
        // mapping E_I through the monomial basis and the direct
        // word identification gives S_I(n)
        for weight in 1..=5u32 {
            for comp in compositions_of_weight(weight) {
                let e = QSymExpr::from_composition(Basis::E, comp.clone());
                let m = convert_basis(&e, Basis::M);
                let mut word_poly = NCPoly::zero();
                for (i, coeff) in m.terms() {
                    word_poly.add_term(i.to_word(), coeff.clone());
                }
                for n in 0..=8 {
                    assert_eq!(
                        evaluate_harmonic(&word_poly, n).unwrap(),
                        s_sum(&comp, n),
                        "I = {}, n = {}",
                        comp,
                        n
                    );
                }
            }
        }
    }

    #[test]
    fn modp_examples() {
        assert_eq!(s_modp(&c("(1)"), 5).unwrap(), 0);
        assert_eq!(s_modp(&c("(2)"), 7).unwrap(), 0);
        assert!(a_modp(&c("(2)"), 6).is_err());
        let poly = parse_ncpoly("1/6*xy").unwrap();
        assert!(chi_p(&poly, 3).is_err()); // denominator divisible by 3
        assert!(chi_p(&poly, 5).is_ok());
    }

    #[test]
    fn modp_matches_exact_reduction() {
        let ctx = ModCtx::new(13).unwrap();
        for comp in [c("(1)"), c("(2,1)"), c("(1,1,2)")] {
            let exact = a_sum(&comp, 12);
            assert_eq!(a_modp(&comp, 13).unwrap(), ctx.reduce(&exact).unwrap());
            let exact = s_sum(&comp, 12);
            assert_eq!(s_modp(&comp, 13).unwrap(), ctx.reduce(&exact).unwrap());
        }
    }

    #[test]
    fn psi_congruence_example() {
        // χ_p(w) = χ_p(ψ(w)) at w = x²y³, p = 11
        let w = parse_ncpoly("x^2y^3").unwrap();
        let psi_w = crate::poly::psi_hom().apply(&w);
        assert_eq!(chi_p(&w, 11).unwrap(), chi_p(&psi_w, 11).unwrap());
    }

    #[test]
    fn set_partition_counts() {
        let bell = [1usize, 1, 2, 5, 15, 52, 203, 877, 4140];
        for k in 0..=8 {
            assert_eq!(set_partitions(k).len(), bell[k]);
        }
        assert_eq!(permutations(4).len(), 24);
    }

    #[test]
    fn h1_words_census() {
        // the evaluation homomorphism is defined exactly on words ending in y
        for w in h1_words_of_weight(4) {
            assert!(evaluate_harmonic(&NCPoly::from_word(w), 3).is_ok());
        }
        assert!(evaluate_harmonic(&NCPoly::x(), 3).is_err());
    }
}
