//! Formal power series in a central variable t with polynomial coefficients,
//! truncated at a fixed order, and exact exponentials of weight-raising
//! derivation sums.

use crate::poly::{Derivation, NCPoly, Rat};
use crate::word::Word;
use crate::{Error, Result};
use num_traits::Zero;

/// A truncated series c₀ + c₁t + … + c_K t^K with NCPoly coefficients.
/// All arithmetic discards terms of t-degree above the order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries {
    order: usize,
    coeffs: Vec<NCPoly>,
}

impl TruncSeries {
    pub fn zero(order: usize) -> TruncSeries {
        TruncSeries {
            order,
            coeffs: vec![NCPoly::zero(); order + 1],
        }
    }

    /// A polynomial regarded as a constant series.
    pub fn constant(p: NCPoly, order: usize) -> TruncSeries {
        let mut s = TruncSeries::zero(order);
        s.coeffs[0] = p;
        s
    }

    /// Build from explicit coefficients (padded or truncated to the order).
    pub fn from_coeffs(coeffs: Vec<NCPoly>, order: usize) -> TruncSeries {
        let mut s = TruncSeries::zero(order);
        for (i, c) in coeffs.into_iter().enumerate().take(order + 1) {
            s.coeffs[i] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coefficient(&self, i: usize) -> &NCPoly {
        &self.coeffs[i]
    }

    pub fn coefficients(&self) -> &[NCPoly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(NCPoly::is_zero)
    }

    pub fn truncate(&self, order: usize) -> TruncSeries {
        TruncSeries::from_coeffs(self.coeffs.clone(), order.min(self.order))
    }

    pub fn add(&self, other: &TruncSeries) -> TruncSeries {
        let order = self.order.min(other.order);
        let mut s = TruncSeries::zero(order);
        for i in 0..=order {
            s.coeffs[i] = &self.coeffs[i] + &other.coeffs[i];
        }
        s
    }

    pub fn sub(&self, other: &TruncSeries) -> TruncSeries {
        let order = self.order.min(other.order);
        let mut s = TruncSeries::zero(order);
        for i in 0..=order {
            s.coeffs[i] = &self.coeffs[i] - &other.coeffs[i];
        }
        s
    }

    pub fn scale(&self, c: &Rat) -> TruncSeries {
        TruncSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect(),
        }
    }

    /// Multiply by t^k (shift coefficients up, dropping overflow).
    pub fn shift(&self, k: usize) -> TruncSeries {
        let mut s = TruncSeries::zero(self.order);
        for i in 0..=self.order.saturating_sub(k) {
            s.coeffs[i + k] = self.coeffs[i].clone();
        }
        s
    }

    /// Product with coefficients multiplied by concatenation.
    pub fn mul(&self, other: &TruncSeries) -> TruncSeries {
        let order = self.order.min(other.order);
        let mut s = TruncSeries::zero(order);
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=order - i {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                let prod = self.coeffs[i].concat(&other.coeffs[j]);
                s.coeffs[i + j].add_assign(&prod);
            }
        }
        s
    }

    pub fn pow(&self, k: usize) -> TruncSeries {
        let mut out = TruncSeries::constant(NCPoly::one(), self.order);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Apply a linear map to every coefficient.
    pub fn map_coeffs(&self, f: impl Fn(&NCPoly) -> NCPoly) -> TruncSeries {
        TruncSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// Evaluate at an exact rational t (for identities polynomial in t).
    pub fn eval(&self, t: &Rat) -> NCPoly {
        let mut out = NCPoly::zero();
        let mut power = Rat::from_integer(1.into());
        for c in &self.coeffs {
            out.add_assign(&c.scale(&power));
            power *= t;
        }
        out
    }
}

/// The operator exp(Σ c_n t^n Δ_n) computed exactly through a fixed t-order.
/// Each generator Δ_n must raise weight by exactly n (its position in the
/// list, starting at 1), so the exponential truncates exactly.
pub struct ExpSeriesOp {
    gens: Vec<(Rat, Derivation)>,
}

impl ExpSeriesOp {
    pub fn new(gens: Vec<(Rat, Derivation)>) -> Result<ExpSeriesOp> {
        for (i, (_, d)) in gens.iter().enumerate() {
            if d.weight_raise() != Some(i + 1) {
                return Err(Error::NotWeightRaising {
                    index: i,
                    expected: i + 1,
                });
            }
        }
        Ok(ExpSeriesOp { gens })
    }

    /// The derivation sum L = Σ c_n t^n Δ_n applied to a series.
    fn apply_log(&self, s: &TruncSeries) -> TruncSeries {
        let mut out = TruncSeries::zero(s.order());
        for (n, (c, d)) in self.gens.iter().enumerate() {
            let deg = n + 1;
            if c.is_zero() {
                continue;
            }
            for i in 0..=s.order().saturating_sub(deg) {
                if s.coefficient(i).is_zero() {
                    continue;
                }
                out.coeffs[i + deg].add_assign(&d.apply(s.coefficient(i)).scale(c));
            }
        }
        out
    }

    /// exp(L) applied to a series; exact because L raises t-degree.
    pub fn apply(&self, s: &TruncSeries) -> TruncSeries {
        let mut out = s.clone();
        let mut term = s.clone();
        for m in 1..=s.order() {
            term = self
                .apply_log(&term)
                .scale(&Rat::new(1.into(), (m as i64).into()));
            if term.is_zero() {
                break;
            }
            out = out.add(&term);
        }
        out
    }

    /// Convenience: apply to a polynomial regarded as a constant series.
    pub fn apply_poly(&self, p: &NCPoly, order: usize) -> TruncSeries {
        self.apply(&TruncSeries::constant(p.clone(), order))
    }
}

/// The series x + ty used by the cyclic sum identity.
pub fn x_plus_ty(order: usize) -> TruncSeries {
    let mut s = TruncSeries::zero(order);
    s.coeffs[0] = NCPoly::from_word(Word::x_power(1));
    if order >= 1 {
        s.coeffs[1] = NCPoly::from_word(Word::y_power(1));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;
    use crate::text::parse_ncpoly;

    fn p(s: &str) -> NCPoly {
        parse_ncpoly(s).unwrap()
    }

    fn d1() -> Derivation {
        Derivation::new(NCPoly::zero(), p("xy"))
    }

    #[test]
    fn exp_single_derivation() {
        // exp(t D1)(y) = y + t xy + (t^2/2) x^2 y through order 2
        let op = ExpSeriesOp::new(vec![(rat(1, 1), d1())]).unwrap();
        let got = op.apply_poly(&NCPoly::y(), 2);
        assert_eq!(got.coefficient(0), &p("y"));
        assert_eq!(got.coefficient(1), &p("xy"));
        assert_eq!(got.coefficient(2), &p("1/2*x^2y"));
    }

    #[test]
    fn exp_empty_is_identity() {
        let op = ExpSeriesOp::new(vec![]).unwrap();
        let s = TruncSeries::constant(p("xy + 2*y"), 3);
        assert_eq!(op.apply(&s), s);
    }

    #[test]
    fn exp_order_one_coefficient() {
        // exp(sum t^n/n D_n)(y): the t coefficient is D1(y) = xy
        let gens = vec![
            (rat(1, 1), d1()),
            (rat(1, 2), Derivation::new(NCPoly::zero(), p("x^2y"))),
            (rat(1, 3), Derivation::new(NCPoly::zero(), p("x^3y"))),
        ];
        let op = ExpSeriesOp::new(gens).unwrap();
        let got = op.apply_poly(&NCPoly::y(), 3);
        assert_eq!(got.coefficient(1), &p("xy"));
    }

    #[test]
    fn truncation_consistency() {
        let gens = vec![
            (rat(1, 1), d1()),
            (rat(1, 2), Derivation::new(NCPoly::zero(), p("x^2y"))),
        ];
        let op = ExpSeriesOp::new(gens).unwrap();
        let full = op.apply_poly(&p("xy + y"), 4);
        let cut = op.apply_poly(&p("xy + y"), 2);
        assert_eq!(full.truncate(2), cut);
    }

    #[test]
    fn non_weight_raising_rejected() {
        let bad = Derivation::new(p("x"), p("y"));
        assert!(matches!(
            ExpSeriesOp::new(vec![(rat(1, 1), bad)]),
            Err(Error::NotWeightRaising { index: 0, expected: 1 })
        ));
        // a degree-2 image in the degree-1 slot is also rejected
        let wrong_slot = Derivation::new(NCPoly::zero(), p("x^2y"));
        assert!(ExpSeriesOp::new(vec![(rat(1, 1), wrong_slot)]).is_err());
    }

    #[test]
    fn series_arithmetic() {
        let u = x_plus_ty(3);
        let sq = u.pow(2);
        assert_eq!(sq.coefficient(0), &p("xx"));
        assert_eq!(sq.coefficient(1), &p("xy + yx"));
        assert_eq!(sq.coefficient(2), &p("yy"));
        assert!(sq.coefficient(3).is_zero());
        let shifted = sq.shift(2);
        assert_eq!(shifted.coefficient(2), &p("xx"));
        assert_eq!(shifted.coefficient(3), &p("xy + yx"));
        assert_eq!(sq.eval(&rat(2, 1)), p("xx + 2*xy + 2*yx + 4*yy"));
    }
}
