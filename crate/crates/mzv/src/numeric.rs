//! Floating-point evaluation of multiple zeta values with tracked error
//! bounds.
//!
//! ζ(i₁,…,i_k) is the limit of the strict finite sums A_I(N).  The
//! evaluator streams partial sums at doubling checkpoints N, 2N, 4N, …,
//! extrapolates the tail by fitting c·(log N)^a / N^{i₁-1} to the last
//! three checkpoints, and reports 3× the difference of successive
//! corrected estimates as the absolute error bound.  The bound is a
//! validated policy, not a proven enclosure; the unit tests check it
//! against closed forms.

use crate::finite::nested_sum_stream;
use crate::poly::{NCPoly, Rat};
use crate::qsym::decompose_h1_over_h0;
use crate::word::Composition;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use std::collections::HashMap;
use std::sync::Mutex;

/// Euler's constant γ.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// A machine-precision value with a tracked absolute error bound.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ApproxValue {
    pub value: f64,
    pub error_bound: f64,
}

impl ApproxValue {
    pub fn exact(value: f64) -> ApproxValue {
        ApproxValue {
            value,
            error_bound: 0.0,
        }
    }

    pub fn new(value: f64, error_bound: f64) -> ApproxValue {
        ApproxValue { value, error_bound }
    }

    pub fn add(self, other: ApproxValue) -> ApproxValue {
        ApproxValue::new(self.value + other.value, self.error_bound + other.error_bound)
    }

    pub fn sub(self, other: ApproxValue) -> ApproxValue {
        ApproxValue::new(self.value - other.value, self.error_bound + other.error_bound)
    }

    pub fn mul(self, other: ApproxValue) -> ApproxValue {
        let bound = self.value.abs() * other.error_bound
            + other.value.abs() * self.error_bound
            + self.error_bound * other.error_bound;
        ApproxValue::new(self.value * other.value, bound)
    }

    pub fn scale(self, c: f64) -> ApproxValue {
        ApproxValue::new(self.value * c, self.error_bound * c.abs())
    }
}

/// Exact Bernoulli numbers (B₁ = -1/2 convention), cached as computed.
#[derive(Default)]
pub struct BernoulliCache {
    values: Vec<Rat>,
}

impl BernoulliCache {
    pub fn new() -> BernoulliCache {
        BernoulliCache::default()
    }

    pub fn get(&mut self, n: usize) -> Rat {
        while self.values.len() <= n {
            let m = self.values.len();
            if m == 0 {
                self.values.push(Rat::one());
                continue;
            }
            // Σ_{j=0}^{m} C(m+1, j) B_j = 0
            let mut acc = Rat::zero();
            let mut binom = BigInt::one(); // C(m+1, 0)
            for (j, b) in self.values.iter().enumerate() {
                acc += Rat::from_integer(binom.clone()) * b;
                binom = &binom * BigInt::from(m + 1 - j) / BigInt::from(j + 1);
            }
            // binom now holds C(m+1, m) = m+1
            let value = -acc / Rat::from_integer(binom);
            self.values.push(value);
        }
        self.values[n].clone()
    }
}

/// Exact Bernoulli number by the standard recurrence.
pub fn bernoulli(n: usize) -> Rat {
    BernoulliCache::new().get(n)
}

/// Default cap on the summation range of a single evaluation.
pub const DEFAULT_CAP: u64 = 1 << 21;

/// The ζ evaluator.  Evaluations are cached per composition so that
/// identity sweeps reuse work; the cache stores the best bound achieved.
pub struct Zeta {
    cache: Mutex<HashMap<Composition, ApproxValue>>,
    pub cap: u64,
}

impl Default for Zeta {
    fn default() -> Self {
        Zeta::new()
    }
}

impl Zeta {
    pub fn new() -> Zeta {
        Zeta {
            cache: Mutex::new(HashMap::new()),
            cap: DEFAULT_CAP,
        }
    }

    pub fn with_cap(cap: u64) -> Zeta {
        Zeta {
            cache: Mutex::new(HashMap::new()),
            cap,
        }
    }

    /// ζ at an admissible composition (first part ≥ 2, or empty = 1),
    /// to within `tol` when achievable under the cap; the returned bound
    /// is honest either way.
    pub fn mzv(&self, comp: &Composition, tol: f64) -> Result<ApproxValue> {
        if comp.is_empty() {
            return Ok(ApproxValue::exact(1.0));
        }
        if comp.parts()[0] < 2 {
            return Err(Error::domain(format!(
                "composition {} is not admissible (first part must be ≥ 2)",
                comp
            )));
        }
        if tol <= 0.0 {
            return Err(Error::domain("tolerance must be positive".to_string()));
        }
        if let Some(hit) = self.cache.lock().unwrap().get(comp) {
            if hit.error_bound <= tol {
                return Ok(*hit);
            }
        }
        let result = evaluate_composition(comp, tol, self.cap);
        let mut cache = self.cache.lock().unwrap();
        let entry = cache.entry(comp.clone()).or_insert(result);
        if result.error_bound < entry.error_bound {
            *entry = result;
        }
        Ok(*entry)
    }

    /// ζ extended linearly to polynomials with admissible support; the
    /// tolerance is apportioned across the terms.
    pub fn zeta_poly(&self, p: &NCPoly, tol: f64) -> Result<ApproxValue> {
        if p.is_zero() {
            return Ok(ApproxValue::exact(0.0));
        }
        let mut coeff_mass = 0.0f64;
        for (w, c) in p.terms() {
            if !w.is_admissible() {
                return Err(Error::domain(format!("word {} is not admissible", w)));
            }
            coeff_mass += rat_to_f64(c).abs();
        }
        let per_term = tol / coeff_mass.max(1.0);
        let mut acc = ApproxValue::exact(0.0);
        for (w, c) in p.terms() {
            let comp = if w.is_unit() {
                Composition::empty()
            } else {
                w.to_composition().expect("admissible words end in y")
            };
            let coeff = rat_to_f64(c);
            let term_tol = (per_term / coeff.abs().max(1.0)).max(1e-13);
            let value = self.mzv(&comp, term_tol)?;
            acc = acc.add(value.scale(coeff));
        }
        Ok(acc)
    }

    /// ζ extended to all of ℍ¹ through the decomposition ℍ¹ = ℍ⁰[y] under
    /// the harmonic product, sending y to Euler's constant γ:
    /// Σ_j c_j * y^{*j} ↦ Σ_j ζ(c_j)·γ^j.
    pub fn zeta_hat(&self, p: &NCPoly, tol: f64) -> Result<ApproxValue> {
        let parts = decompose_h1_over_h0(p)?;
        if parts.is_empty() {
            return Ok(ApproxValue::exact(0.0));
        }
        let per_part = tol / parts.len() as f64;
        let mut acc = ApproxValue::exact(0.0);
        for (c_j, j) in parts {
            let base = self.zeta_poly(&c_j, per_part)?;
            acc = acc.add(base.scale(EULER_GAMMA.powi(j as i32)));
        }
        Ok(acc)
    }
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
}

/// Exact rational as an ApproxValue (one rounding).
pub fn rat_to_approx(r: &Rat) -> ApproxValue {
    let v = rat_to_f64(r);
    ApproxValue::new(v, v.abs() * 1e-15)
}

fn evaluate_composition(comp: &Composition, tol: f64, cap: u64) -> ApproxValue {
    let decay = (comp.parts()[0] - 1) as f64;
    let mut checkpoints: Vec<(u64, f64)> = Vec::new();
    let mut estimates: Vec<f64> = Vec::new();
    let mut best = ApproxValue::new(f64::NAN, f64::INFINITY);
    let mut next = 64u64;
    nested_sum_stream(comp.parts(), true, |n, value| {
        if n < next {
            return true;
        }
        checkpoints.push((n, value));
        next = n * 2;
        let k = checkpoints.len();
        if k >= 3 {
            let correction = fit_tail(decay, checkpoints[k - 3], checkpoints[k - 2], checkpoints[k - 1]);
            estimates.push(value + correction);
        } else {
            estimates.push(value);
        }
        let m = estimates.len();
        if m >= 2 {
            let spread = (estimates[m - 1] - estimates[m - 2]).abs();
            // rounding noise from ~n floating additions
            let noise = 1e-15 * n as f64 * value.abs().max(1.0);
            let bound = 3.0 * spread + noise + 1e-14;
            if bound < best.error_bound {
                best = ApproxValue::new(estimates[m - 1], bound);
            }
            if best.error_bound <= tol {
                return false;
            }
        }
        next <= cap
    });
    best
}

/// Fit tail(N) = c (log N)^a N^{-b} through the last three partial sums and
/// return the predicted remaining tail at the last checkpoint.
fn fit_tail(b: f64, p1: (u64, f64), p2: (u64, f64), p3: (u64, f64)) -> f64 {
    let d1 = p2.1 - p1.1;
    let d2 = p3.1 - p2.1;
    if d2 <= 0.0 || d1 <= 0.0 {
        // converged to machine precision
        return 0.0;
    }
    let target = d2 / d1;
    let shape = |a: f64, n: u64| (n as f64).ln().powf(a) * (n as f64).powf(-b);
    let ratio = |a: f64| {
        let t1 = shape(a, p1.0) - shape(a, p2.0);
        let t2 = shape(a, p2.0) - shape(a, p3.0);
        t2 / t1
    };
    // the ratio increases with a; bisect
    let (mut lo, mut hi) = (-8.0f64, 24.0f64);
    if ratio(lo) > target || ratio(hi) < target {
        // outside the model family; fall back to a pure power tail
        let a = 0.0;
        let denom = shape(a, p2.0) - shape(a, p3.0);
        if denom <= 0.0 {
            return 0.0;
        }
        let c = d2 / denom;
        return c * shape(a, p3.0);
    }
    for _ in 0..80 {
        let mid = 0.5 * (lo + hi);
        if ratio(mid) < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let a = 0.5 * (lo + hi);
    let denom = shape(a, p2.0) - shape(a, p3.0);
    if denom <= 0.0 {
        return 0.0;
    }
    let c = d2 / denom;
    c * shape(a, p3.0)
}

/// Taylor coefficients of Γ(1-t) through the given order, from
/// log Γ(1-t) = γt + Σ_{k≥2} ζ(k) t^k / k, exponentiated term by term.
pub fn gamma_taylor(zeta: &Zeta, order: usize, tol: f64) -> Result<Vec<ApproxValue>> {
    let mut log_coeffs = vec![ApproxValue::exact(0.0); order + 1];
    if order >= 1 {
        log_coeffs[1] = ApproxValue::exact(EULER_GAMMA);
    }
    for k in 2..=order {
        let zk = zeta.mzv(&Composition::new(vec![k as u32]).unwrap(), tol)?;
        log_coeffs[k] = zk.scale(1.0 / k as f64);
    }
    // exp of a power series: n·c_n = Σ_{k=1}^{n} k·a_k·c_{n-k}
    let mut coeffs = vec![ApproxValue::exact(0.0); order + 1];
    coeffs[0] = ApproxValue::exact(1.0);
    for n in 1..=order {
        let mut acc = ApproxValue::exact(0.0);
        for k in 1..=n {
            acc = acc.add(log_coeffs[k].scale(k as f64).mul(coeffs[n - k]));
        }
        coeffs[n] = acc.scale(1.0 / n as f64);
    }
    Ok(coeffs)
}

/// Exact binomial coefficient.
pub fn binomial(n: u64, k: u64) -> Rat {
    if k > n {
        return Rat::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Rat::from_integer(acc)
}

/// π^{2k} / (2k+1)!, the closed form of ζ(2,…,2) with k twos.
pub fn pi_power_closed_form(k: u32) -> f64 {
    let mut acc = 1.0f64;
    for _ in 0..k {
        acc *= std::f64::consts::PI * std::f64::consts::PI;
    }
    let mut fact = 1.0f64;
    for i in 2..=(2 * k + 1) {
        fact *= i as f64;
    }
    acc / fact
}
