//! The identity-verification harness: every classical statement the
//! library can check numerically or as an exact congruence is packaged as
//! a function producing [`VerifyReport`]s, one per instance.

use crate::action::{cyclic_c, d_n, dot};
use crate::finite::{nested_sum, ModCtx};
use crate::numeric::{
    binomial, gamma_taylor, rat_to_approx, ApproxValue, BernoulliCache, Zeta, EULER_GAMMA,
};
use crate::poly::{psi_hom, rat_int, NCPoly, Rat};
use crate::qsym::{star, sym_generator, SymKind};
use crate::shuffle::shuffle;
use crate::word::{
    admissible_words_of_weight, compositions_of_weight, h1_words_of_weight, Composition, Word,
};
use crate::Result;
use num_traits::One;
use serde_json::{json, Value};
use std::collections::HashMap;

/// Outcome of one identity instance.  The pass rule is
/// |lhs - rhs| ≤ tolerance + lhs.error_bound + rhs.error_bound.
#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub identity: String,
    pub params: String,
    pub lhs: ApproxValue,
    pub rhs: ApproxValue,
    pub abs_diff: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl VerifyReport {
    pub fn new(
        identity: &str,
        params: String,
        lhs: ApproxValue,
        rhs: ApproxValue,
        tolerance: f64,
    ) -> VerifyReport {
        let abs_diff = (lhs.value - rhs.value).abs();
        let pass = abs_diff <= tolerance + lhs.error_bound + rhs.error_bound;
        VerifyReport {
            identity: identity.to_string(),
            params,
            lhs,
            rhs,
            abs_diff,
            tolerance,
            pass,
        }
    }

    /// An exact comparison (residues or symbolic counts): zero tolerance,
    /// zero bounds.
    pub fn exact(identity: &str, params: String, lhs: f64, rhs: f64) -> VerifyReport {
        VerifyReport::new(
            identity,
            params,
            ApproxValue::exact(lhs),
            ApproxValue::exact(rhs),
            0.0,
        )
    }

    pub fn to_json(&self) -> Value {
        json!({
            "identity": self.identity,
            "params": self.params,
            "lhs": {"value": self.lhs.value, "error_bound": self.lhs.error_bound},
            "rhs": {"value": self.rhs.value, "error_bound": self.rhs.error_bound},
            "abs_diff": self.abs_diff,
            "tolerance": self.tolerance,
            "pass": self.pass,
        })
    }
}

pub fn all_pass(reports: &[VerifyReport]) -> bool {
    reports.iter().all(|r| r.pass)
}

// ---------------------------------------------------------------------------
// numeric identities
// ---------------------------------------------------------------------------

/// ζ(w) = ζ(τw) for one admissible word.
pub fn duality_word(z: &Zeta, w: &Word, tol: f64) -> Result<VerifyReport> {
    let lhs = z.zeta_poly(&NCPoly::from_word(w.clone()), tol)?;
    let rhs = z.zeta_poly(&NCPoly::from_word(w.tau()), tol)?;
    Ok(VerifyReport::new("duality", format!("w={}", w), lhs, rhs, tol))
}

/// Duality for every admissible word of weight ≤ max_weight.
pub fn duality(z: &Zeta, max_weight: usize, tol: f64) -> Result<Vec<VerifyReport>> {
    let mut out = Vec::new();
    for n in 2..=max_weight {
        for w in admissible_words_of_weight(n) {
            out.push(duality_word(z, &w, tol)?);
        }
    }
    Ok(out)
}

/// Σ_{|w|=n, ℓ(w)=k} ζ(w) = ζ(n), both sides summed independently.
pub fn sum_theorem(z: &Zeta, n: usize, k: usize, tol: f64) -> Result<VerifyReport> {
    let mut family = NCPoly::zero();
    for w in admissible_words_of_weight(n) {
        if w.length() == k {
            family.add_term(w, Rat::one());
        }
    }
    let lhs = z.zeta_poly(&family, tol)?;
    let rhs = z.mzv(&Composition::new(vec![n as u32]).unwrap(), tol)?;
    Ok(VerifyReport::new(
        "sum",
        format!("n={}, k={}", n, k),
        lhs,
        rhs,
        tol,
    ))
}

pub fn sum_theorem_sweep(z: &Zeta, max_n: usize, tol: f64) -> Result<Vec<VerifyReport>> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        for k in 1..n {
            out.push(sum_theorem(z, n, k, tol)?);
        }
    }
    Ok(out)
}

/// ζ(D(w)) = ζ(D(τw)) with D the derivation x ↦ 0, y ↦ xy.
pub fn derivation_word(z: &Zeta, w: &Word, tol: f64) -> Result<VerifyReport> {
    let lhs = z.zeta_poly(&d_n(&NCPoly::from_word(w.clone()), 1), tol)?;
    let rhs = z.zeta_poly(&d_n(&NCPoly::from_word(w.tau()), 1), tol)?;
    Ok(VerifyReport::new(
        "derivation",
        format!("w={}", w),
        lhs,
        rhs,
        tol,
    ))
}

pub fn derivation(z: &Zeta, max_weight: usize, tol: f64) -> Result<Vec<VerifyReport>> {
    let mut out = Vec::new();
    for n in 2..=max_weight {
        for w in admissible_words_of_weight(n) {
            out.push(derivation_word(z, &w, tol)?);
        }
    }
    Ok(out)
}

/// Ohno's theorem ζ(h_i·w) = ζ(h_i·τw) for one word and one i ≥ 0.
pub fn ohno_word(z: &Zeta, w: &Word, i: u32, tol: f64) -> Result<VerifyReport> {
    let h = sym_generator(SymKind::Complete, i);
    let lhs = z.zeta_poly(&dot(&h, &NCPoly::from_word(w.clone()))?, tol)?;
    let rhs = z.zeta_poly(&dot(&h, &NCPoly::from_word(w.tau()))?, tol)?;
    Ok(VerifyReport::new(
        "ohno",
        format!("w={}, i={}", w, i),
        lhs,
        rhs,
        tol,
    ))
}

/// Ohno's theorem for all admissible w and i ≥ 0 with i + |w| ≤ max_total.
pub fn ohno(z: &Zeta, max_total: usize, tol: f64) -> Result<Vec<VerifyReport>> {
    let mut out = Vec::new();
    for n in 2..=max_total {
        for w in admissible_words_of_weight(n) {
            for i in 0..=(max_total - n) as u32 {
                out.push(ohno_word(z, &w, i, tol)?);
            }
        }
    }
    Ok(out)
}

/// ζ(C(w)) = ζ(τCτ(w)) for w ending in y and not a power of y.
pub fn cyclic_word(z: &Zeta, w: &Word, tol: f64) -> Result<VerifyReport> {
    let poly = NCPoly::from_word(w.clone());
    let lhs = z.zeta_poly(&cyclic_c(&poly, 1), tol)?;
    let rhs = z.zeta_poly(&cyclic_c(&poly.tau(), 1).tau(), tol)?;
    Ok(VerifyReport::new("cyclic", format!("w={}", w), lhs, rhs, tol))
}

pub fn cyclic(z: &Zeta, max_weight: usize, tol: f64) -> Result<Vec<VerifyReport>> {
    let mut out = Vec::new();
    for n in 1..=max_weight {
        for w in h1_words_of_weight(n as u32) {
            if w.colength() == 0 {
                continue; // powers of y are excluded
            }
            out.push(cyclic_word(z, &w, tol)?);
        }
    }
    Ok(out)
}

/// ζ(z_n·xy^m) = ζ(z_m·xy^n).
pub fn cyclic_action(z: &Zeta, m: u32, n: u32, tol: f64) -> Result<VerifyReport> {
    let xym = |k: u32| {
        let mut letters = vec![crate::word::Letter::X];
        letters.extend(std::iter::repeat(crate::word::Letter::Y).take(k as usize));
        NCPoly::from_word(Word::from_letters(letters))
    };
    let zn = NCPoly::from_word(Word::z(n));
    let zm = NCPoly::from_word(Word::z(m));
    let lhs = z.zeta_poly(&dot(&zn, &xym(m))?, tol)?;
    let rhs = z.zeta_poly(&dot(&zm, &xym(n))?, tol)?;
    Ok(VerifyReport::new(
        "cyclic-action",
        format!("m={}, n={}", m, n),
        lhs,
        rhs,
        tol,
    ))
}

pub fn cyclic_action_sweep(z: &Zeta, max_total: u32, tol: f64) -> Result<Vec<VerifyReport>> {
    let mut out = Vec::new();
    for m in 1..max_total {
        for n in 1..max_total {
            if m + n + 1 <= max_total {
                out.push(cyclic_action(z, m, n, tol)?);
            }
        }
    }
    Ok(out)
}

/// ζ(4,3^{n-1}) = ζ(3^n,1) + ζ(2,3^{n-1},2), the cyclic identity on the
/// periodic word (x²y)^n.
pub fn periodic_cyclic(z: &Zeta, n: usize, tol: f64) -> Result<VerifyReport> {
    let mut first = vec![4u32];
    first.extend(std::iter::repeat(3).take(n - 1));
    let mut second: Vec<u32> = std::iter::repeat(3).take(n).collect();
    second.push(1);
    let mut third = vec![2u32];
    third.extend(std::iter::repeat(3).take(n - 1));
    third.push(2);
    let lhs = z.mzv(&Composition::new(first).unwrap(), tol)?;
    let rhs = z
        .mzv(&Composition::new(second).unwrap(), tol)?
        .add(z.mzv(&Composition::new(third).unwrap(), tol)?);
    Ok(VerifyReport::new(
        "periodic-cyclic",
        format!("n={}", n),
        lhs,
        rhs,
        tol,
    ))
}

pub fn periodic_cyclic_sweep(z: &Zeta, max_n: usize, tol: f64) -> Result<Vec<VerifyReport>> {
    (1..=max_n).map(|n| periodic_cyclic(z, n, tol)).collect()
}

/// The Le–Murakami identity at weight 2n and height k:
/// Σ_{|w|=2n, ht(w)=k} (-1)^{ℓ(w)} ζ(w)
///   = (-1)^n ζ((xy)^n) Σ_{j=0}^{n-k} C(2n+1, 2j)(2 - 2^{2j}) B_{2j}.
pub fn le_murakami(z: &Zeta, n: u32, k: u32, tol: f64) -> Result<VerifyReport> {
    let mut family = NCPoly::zero();
    for w in admissible_words_of_weight(2 * n as usize) {
        if w.height() == k as usize {
            let sign = if w.length() % 2 == 0 { 1 } else { -1 };
            family.add_term(w, rat_int(sign));
        }
    }
    let lhs = z.zeta_poly(&family, tol)?;

    let mut bernoulli = BernoulliCache::new();
    let mut factor = Rat::from_integer(0.into());
    for j in 0..=(n - k) {
        let two_pow = rat_int(1i64 << (2 * j));
        factor += binomial(2 * n as u64 + 1, 2 * j as u64)
            * (rat_int(2) - two_pow)
            * bernoulli.get(2 * j as usize);
    }
    if n % 2 == 1 {
        factor = -factor;
    }
    let zeta_xy_n = z.mzv(&Composition::new(vec![2; n as usize]).unwrap(), tol)?;
    let rhs = zeta_xy_n.mul(rat_to_approx(&factor));
    Ok(VerifyReport::new(
        "le-murakami",
        format!("n={}, k={}", n, k),
        lhs,
        rhs,
        tol,
    ))
}

pub fn le_murakami_sweep(z: &Zeta, max_weight: u32, tol: f64) -> Result<Vec<VerifyReport>> {
    let mut out = Vec::new();
    for n in 1..=max_weight / 2 {
        for k in 1..=n {
            out.push(le_murakami(z, n, k, tol)?);
        }
    }
    Ok(out)
}

/// ζ((x²y²)^n) = ζ((xy)^{2n}) / (2n+1).
pub fn zagier_ratio(z: &Zeta, n: u32, tol: f64) -> Result<VerifyReport> {
    let left_comp = {
        let mut parts = Vec::new();
        for _ in 0..n {
            parts.push(3);
            parts.push(1);
        }
        Composition::new(parts).unwrap()
    };
    let lhs = z.mzv(&left_comp, tol)?;
    let rhs = z
        .mzv(&Composition::new(vec![2; 2 * n as usize]).unwrap(), tol)?
        .scale(1.0 / (2.0 * n as f64 + 1.0));
    Ok(VerifyReport::new(
        "zagier",
        format!("n={}", n),
        lhs,
        rhs,
        tol,
    ))
}

pub fn zagier_sweep(z: &Zeta, max_n: u32, tol: f64) -> Result<Vec<VerifyReport>> {
    (1..=max_n).map(|n| zagier_ratio(z, n, tol)).collect()
}

/// ζ((xy)^k) = π^{2k}/(2k+1)!.
pub fn pi_power(z: &Zeta, k: u32, tol: f64) -> Result<VerifyReport> {
    let lhs = z.mzv(&Composition::new(vec![2; k as usize]).unwrap(), tol)?;
    let rhs = ApproxValue::exact(crate::numeric::pi_power_closed_form(k));
    Ok(VerifyReport::new(
        "pi-power",
        format!("k={}", k),
        lhs,
        rhs,
        tol,
    ))
}

pub fn pi_power_sweep(z: &Zeta, max_k: u32, tol: f64) -> Result<Vec<VerifyReport>> {
    (1..=max_k).map(|k| pi_power(z, k, tol)).collect()
}

/// ζ̂ of the complete generating function against the Taylor expansion of
/// Γ(1-t), coefficient by coefficient through the given order.
pub fn gamma_series(z: &Zeta, order: usize, tol: f64) -> Result<Vec<VerifyReport>> {
    let taylor = gamma_taylor(z, order, tol / 4.0)?;
    let mut out = Vec::new();
    for n in 0..=order {
        let h_n = sym_generator(SymKind::Complete, n as u32);
        let lhs = z.zeta_hat(&h_n, tol / 2.0)?;
        out.push(VerifyReport::new(
            "gamma-series",
            format!("order t^{}", n),
            lhs,
            taylor[n],
            tol,
        ));
    }
    Ok(out)
}

/// The height-one generating identity: the coefficient of u^i v^j in
/// 1 - H(u)H(v)E(-(u+v)) evaluates under ζ to ζ(x^i y^j); one report per
/// bidegree with i+j ≤ max_weight.
pub fn height_one(z: &Zeta, max_weight: u32, tol: f64) -> Result<Vec<VerifyReport>> {
    let h: Vec<NCPoly> = (0..=max_weight)
        .map(|a| sym_generator(SymKind::Complete, a))
        .collect();
    let e: Vec<NCPoly> = (0..=max_weight)
        .map(|a| sym_generator(SymKind::Elementary, a))
        .collect();
    let mut out = Vec::new();
    for i in 0..=max_weight {
        for j in 0..=(max_weight - i) {
            if i + j == 0 {
                continue;
            }
            // coefficient of u^i v^j in H(u) H(v) E(-(u+v))
            let mut coeff = NCPoly::zero();
            for a in 0..=i {
                for b in 0..=j {
                    let r = i - a;
                    let s = j - b;
                    let sign = if (r + s) % 2 == 0 { 1 } else { -1 };
                    let scalar = binomial((r + s) as u64, r as u64) * rat_int(sign);
                    let prod = star(&star(&h[a as usize], &h[b as usize]), &e[(r + s) as usize]);
                    coeff.add_assign(&prod.scale(&scalar));
                }
            }
            // the generating function is 1 - H(u)H(v)E(-(u+v))
            let lhs_poly = -&coeff;
            let lhs = z.zeta_poly(&lhs_poly, tol)?;
            let rhs = if i >= 1 && j >= 1 {
                let mut letters = vec![crate::word::Letter::X; i as usize];
                letters.extend(std::iter::repeat(crate::word::Letter::Y).take(j as usize));
                z.zeta_poly(&NCPoly::from_word(Word::from_letters(letters)), tol)?
            } else {
                ApproxValue::exact(0.0)
            };
            out.push(VerifyReport::new(
                "height-one",
                format!("u^{} v^{}", i, j),
                lhs,
                rhs,
                tol,
            ));
        }
    }
    Ok(out)
}

/// ζ̂(u ⧢ v - u * v) ≈ 0 for u ending in y and admissible v, with
/// |u| + |v| ≤ max_weight.
pub fn kernel_zero(z: &Zeta, max_weight: usize, tol: f64) -> Result<Vec<VerifyReport>> {
    let mut out = Vec::new();
    for wu in 1..=max_weight.saturating_sub(2) {
        for u in h1_words_of_weight(wu as u32) {
            for wv in 2..=(max_weight - wu) {
                for v in admissible_words_of_weight(wv) {
                    let pu = NCPoly::from_word(u.clone());
                    let pv = NCPoly::from_word(v.clone());
                    let diff = &shuffle(&pu, &pv) - &star(&pu, &pv);
                    let lhs = z.zeta_hat(&diff, tol)?;
                    out.push(VerifyReport::new(
                        "kernel",
                        format!("u={}, v={}", u, v),
                        lhs,
                        ApproxValue::exact(0.0),
                        tol,
                    ));
                }
            }
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// congruences modulo primes
// ---------------------------------------------------------------------------

fn residue(ctx: &ModCtx, comp: &Composition, strict: bool) -> u64 {
    nested_sum(ctx, comp.parts(), ctx.modulus() - 1, strict)
}

/// S_{(k)}(p-1) ≡ 0 mod p for primes p > k+1.
pub fn modp_power_sums(max_k: u32, max_prime: u64) -> Result<Vec<VerifyReport>> {
    let mut out = Vec::new();
    for k in 1..=max_k {
        for p in crate::finite::primes_up_to(max_prime) {
            if p <= k as u64 + 1 {
                continue;
            }
            let ctx = ModCtx::new(p)?;
            let lhs = residue(&ctx, &Composition::new(vec![k]).unwrap(), false);
            out.push(VerifyReport::exact(
                "power-sum-congruence",
                format!("k={}, p={}", k, p),
                lhs as f64,
                0.0,
            ));
        }
    }
    Ok(out)
}

/// A_I(p-1) ≡ (-1)^{|I|} A_{Ī}(p-1) and the same for the weak sums, for
/// every I of weight ≤ max_weight and every prime ≤ max_prime.
pub fn modp_reversal(max_weight: u32, max_prime: u64) -> Result<Vec<VerifyReport>> {
    let mut out = Vec::new();
    for p in crate::finite::primes_up_to(max_prime) {
        let ctx = ModCtx::new(p)?;
        for weight in 1..=max_weight {
            for comp in compositions_of_weight(weight) {
                let rev = comp.reversed();
                for (tag, strict) in [("A", true), ("S", false)] {
                    let lhs = residue(&ctx, &comp, strict);
                    let mut rhs = residue(&ctx, &rev, strict);
                    if weight % 2 == 1 {
                        rhs = (p - rhs) % p;
                    }
                    out.push(VerifyReport::exact(
                        "reversal-congruence",
                        format!("{}_{}, p={}", tag, comp, p),
                        lhs as f64,
                        rhs as f64,
                    ));
                }
            }
        }
    }
    Ok(out)
}

/// S_I(p-1) ≡ -S_{I*}(p-1) mod p for every prime.
pub fn modp_conjugation(max_weight: u32, max_prime: u64) -> Result<Vec<VerifyReport>> {
    let mut out = Vec::new();
    for p in crate::finite::primes_up_to(max_prime) {
        let ctx = ModCtx::new(p)?;
        for weight in 1..=max_weight {
            for comp in compositions_of_weight(weight) {
                let lhs = residue(&ctx, &comp, false);
                let rhs = (p - residue(&ctx, &comp.conjugate(), false)) % p;
                out.push(VerifyReport::exact(
                    "conjugation-congruence",
                    format!("I={}, p={}", comp, p),
                    lhs as f64,
                    rhs as f64,
                ));
            }
        }
    }
    Ok(out)
}

/// A_{(n,1^k)}(p-1) ≡ A_{(k+1,1^{n-1})}(p-1) for primes p > max(k+1, n).
pub fn modp_hook(max_total: u32, max_prime: u64) -> Result<Vec<VerifyReport>> {
    let mut out = Vec::new();
    for n in 1..=max_total {
        for k in 0..=(max_total - n) {
            let mut left = vec![n];
            left.extend(std::iter::repeat(1).take(k as usize));
            let mut right = vec![k + 1];
            right.extend(std::iter::repeat(1).take(n as usize - 1));
            let left = Composition::new(left).unwrap();
            let right = Composition::new(right).unwrap();
            for p in crate::finite::primes_up_to(max_prime) {
                if p <= (k as u64 + 1).max(n as u64) {
                    continue;
                }
                let ctx = ModCtx::new(p)?;
                out.push(VerifyReport::exact(
                    "hook-congruence",
                    format!("n={}, k={}, p={}", n, k, p),
                    residue(&ctx, &left, true) as f64,
                    residue(&ctx, &right, true) as f64,
                ));
            }
        }
    }
    Ok(out)
}

/// χ_p(w) = χ_p(ψ(w)) for every word of ℍ¹ of weight ≤ max_weight and
/// primes 7 ≤ p ≤ max_prime, plus the resulting relation
/// 2A_{(3,1,1)} ≡ -A_{(2,1,1,1)} - A_{(1,2,1,1)} for p > 6.
pub fn modp_psi(max_weight: u32, max_prime: u64) -> Result<Vec<VerifyReport>> {
    let psi = psi_hom();
    let mut out = Vec::new();
    for p in crate::finite::primes_up_to(max_prime) {
        if p < 7 {
            continue;
        }
        let ctx = ModCtx::new(p)?;
        let mut cache: HashMap<Vec<u32>, u64> = HashMap::new();
        let eval = |comp: &Composition, cache: &mut HashMap<Vec<u32>, u64>| -> u64 {
            if let Some(&hit) = cache.get(comp.parts()) {
                return hit;
            }
            let v = residue(&ctx, comp, true);
            cache.insert(comp.parts().to_vec(), v);
            v
        };
        for weight in 1..=max_weight {
            for comp in compositions_of_weight(weight) {
                let w = comp.to_word();
                let lhs = eval(&comp, &mut cache);
                let image = psi.apply(&NCPoly::from_word(w.clone()));
                let mut rhs = 0u64;
                for (v, coeff) in image.terms() {
                    let j = v.to_composition().expect("psi image stays in h1");
                    let c = ctx.reduce(coeff)?;
                    rhs = (rhs + c * eval(&j, &mut cache)) % p;
                }
                out.push(VerifyReport::exact(
                    "psi-congruence",
                    format!("w={}, p={}", w, p),
                    lhs as f64,
                    rhs as f64,
                ));
            }
        }
        // the closing relation: 2 A_{(3,1,1)} + A_{(2,1,1,1)} + A_{(1,2,1,1)} ≡ 0
        let total = (2 * eval(&Composition::new(vec![3, 1, 1]).unwrap(), &mut cache)
            + eval(&Composition::new(vec![2, 1, 1, 1]).unwrap(), &mut cache)
            + eval(&Composition::new(vec![1, 2, 1, 1]).unwrap(), &mut cache))
            % p;
        out.push(VerifyReport::exact(
            "psi-congruence",
            format!("2A(3,1,1)+A(2,1,1,1)+A(1,2,1,1), p={}", p),
            total as f64,
            0.0,
        ));
    }
    Ok(out)
}

/// A_I(p-1) ≡ S_I(p-1) ≡ 0 for I = (k,…,k) with r parts and p > rk+1.
pub fn modp_repeated(max_total: u32, max_prime: u64) -> Result<Vec<VerifyReport>> {
    let mut out = Vec::new();
    for k in 1..=max_total {
        for r in 1..=(max_total / k) {
            let comp = Composition::new(vec![k; r as usize]).unwrap();
            for p in crate::finite::primes_up_to(max_prime) {
                if p <= (r * k) as u64 + 1 {
                    continue;
                }
                let ctx = ModCtx::new(p)?;
                for (tag, strict) in [("A", true), ("S", false)] {
                    out.push(VerifyReport::exact(
                        "repeated-part-congruence",
                        format!("{}_{}, p={}", tag, comp, p),
                        residue(&ctx, &comp, strict) as f64,
                        0.0,
                    ));
                }
            }
        }
    }
    Ok(out)
}

/// The whole congruence suite at the stated caps.
pub fn modp_suite(max_weight: u32, max_prime: u64) -> Result<Vec<VerifyReport>> {
    let mut out = modp_power_sums(5.min(max_weight), max_prime)?;
    out.extend(modp_reversal(max_weight, max_prime)?);
    out.extend(modp_conjugation(max_weight, max_prime)?);
    out.extend(modp_hook(max_weight + 1, max_prime)?);
    out.extend(modp_psi(max_weight, max_prime)?);
    out.extend(modp_repeated((max_weight + 2).min(8), max_prime)?);
    Ok(out)
}

/// A smoke value used by the gamma-series reports in documentation.
pub fn euler_gamma() -> f64 {
    EULER_GAMMA
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_word;

    #[test]
    fn duality_example() {
        let z = Zeta::new();
        let r = duality_word(&z, &parse_word("x^2y").unwrap(), 1e-5).unwrap();
        assert!(r.pass, "{:?}", r);
        assert!(r.abs_diff <= 1e-5 + r.lhs.error_bound + r.rhs.error_bound);
    }

    #[test]
    fn sum_theorem_example() {
        let z = Zeta::new();
        let r = sum_theorem(&z, 3, 2, 1e-5).unwrap();
        assert!(r.pass, "{:?}", r);
    }

    #[test]
    fn le_murakami_small() {
        let z = Zeta::new();
        // n=1, k=1: -ζ(2) on both sides
        let r = le_murakami(&z, 1, 1, 1e-5).unwrap();
        assert!(r.pass, "{:?}", r);
        let r = le_murakami(&z, 2, 1, 1e-5).unwrap();
        assert!(r.pass, "{:?}", r);
        let r = le_murakami(&z, 2, 2, 1e-5).unwrap();
        assert!(r.pass, "{:?}", r);
    }

    #[test]
    fn exact_report_rule() {
        let r = VerifyReport::exact("x", "test".into(), 3.0, 3.0);
        assert!(r.pass);
        let r = VerifyReport::exact("x", "test".into(), 3.0, 4.0);
        assert!(!r.pass);
    }

    #[test]
    fn modp_small_sweeps() {
        assert!(all_pass(&modp_power_sums(3, 31).unwrap()));
        assert!(all_pass(&modp_reversal(4, 31).unwrap()));
        assert!(all_pass(&modp_conjugation(4, 31).unwrap()));
        assert!(all_pass(&modp_hook(5, 31).unwrap()));
        assert!(all_pass(&modp_psi(4, 31).unwrap()));
        assert!(all_pass(&modp_repeated(6, 31).unwrap()));
    }
}
