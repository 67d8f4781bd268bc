//! Commutative polynomials in finitely many degree-1 variables t₁,…,t_n.
//! This is the expansion target for quasi-symmetric expressions: it serves
//! as the independent oracle for the ring-isomorphism and symmetry checks.

use crate::poly::Rat;
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

/// A polynomial in a fixed number of variables, keyed by exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl VarPoly {
    pub fn zero(nvars: usize) -> VarPoly {
        VarPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rat) -> VarPoly {
        let mut p = VarPoly::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rat)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, expts: Vec<u32>, c: Rat) {
        debug_assert_eq!(expts.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(expts) {
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

    pub fn add_assign(&mut self, other: &VarPoly) {
        for (e, c) in other.terms() {
            self.add_term(e.clone(), c.clone());
        }
    }

    pub fn scale(&self, c: &Rat) -> VarPoly {
        if c.is_zero() {
            return VarPoly::zero(self.nvars);
        }
        VarPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }

    pub fn mul(&self, other: &VarPoly) -> VarPoly {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = VarPoly::zero(self.nvars);
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                let expts = e1.iter().zip(e2.iter()).map(|(a, b)| a + b).collect();
                out.add_term(expts, c1 * c2);
            }
        }
        out
    }

    /// Apply a permutation of the variables (expts[i] moves to perm[i]).
    pub fn permute_vars(&self, perm: &[usize]) -> VarPoly {
        let mut out = VarPoly::zero(self.nvars);
        for (e, c) in self.terms() {
            let mut expts = vec![0u32; self.nvars];
            for (i, &v) in e.iter().enumerate() {
                expts[perm[i]] = v;
            }
            out.add_term(expts, c.clone());
        }
        out
    }

    /// Check invariance under all variable permutations (it suffices to
    /// check the adjacent transpositions).  On failure returns a witness
    /// pair of monomials carrying different coefficients.
    pub fn symmetry_witness(&self) -> Option<(Vec<u32>, Vec<u32>)> {
        for i in 0..self.nvars.saturating_sub(1) {
            let mut perm: Vec<usize> = (0..self.nvars).collect();
            perm.swap(i, i + 1);
            for (e, c) in self.terms() {
                let mut swapped = e.clone();
                swapped.swap(i, i + 1);
                let other = self.terms.get(&swapped).cloned().unwrap_or_else(Rat::zero);
                if &other != c {
                    return Some((e.clone(), swapped));
                }
            }
        }
        None
    }
}

/// Render an exponent vector as a monomial like `t1^2*t3`.
pub fn monomial_string(expts: &[u32]) -> String {
    let mut parts = Vec::new();
    for (i, &e) in expts.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(format!("t{}", i + 1)),
            _ => parts.push(format!("t{}^{}", i + 1, e)),
        }
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

impl fmt::Display for VarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let rendered: Vec<String> = self
            .terms()
            .map(|(e, c)| format!("{}*{}", c, monomial_string(e)))
            .collect();
        write!(f, "{}", rendered.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat_int;

    #[test]
    fn mul_and_symmetry() {
        // (t1 + t2)^2 = t1^2 + 2 t1 t2 + t2^2 is symmetric
        let mut lin = VarPoly::zero(2);
        lin.add_term(vec![1, 0], rat_int(1));
        lin.add_term(vec![0, 1], rat_int(1));
        let sq = lin.mul(&lin);
        assert_eq!(sq.terms().count(), 3);
        assert!(sq.symmetry_witness().is_none());

        let mut asym = VarPoly::zero(2);
        asym.add_term(vec![2, 1], rat_int(1));
        let (a, b) = asym.symmetry_witness().unwrap();
        assert_eq!((a, b), (vec![2, 1], vec![1, 2]));
    }
}
