//! The harmonic (quasi-shuffle) product on Q<x,y>, the isomorphism of its
//! span of words ending in y with the quasi-symmetric functions, the
//! monomial / fundamental / essential bases, the Hopf structure (coproduct
//! and antipode), the symmetric functions sitting inside, and the
//! decomposition of ℍ¹ as a polynomial ring ℍ⁰[y] under the harmonic
//! product.
//!
//! Two word ↔ composition identifications appear in the literature and both
//! are used here, deliberately:
//!
//! * the *direct* one, z_{i₁}⋯z_{i_k} ↔ (i₁,…,i_k), used for the F/E bases,
//!   the involution ψ, and the finite-sum evaluations;
//! * the *reversing* isomorphism φ, z_{i₁}⋯z_{i_k} ↦ M_{(i_k,…,i₁)}, which
//!   matches the expansion of monomial quasi-symmetric functions in ordered
//!   variables.
//!
//! The expansion oracle [`expand_in_variables`] pins both down.

use crate::poly::{rat_int, NCPoly, Rat, TensorPoly};
use crate::varpoly::{monomial_string, VarPoly};
use crate::word::{compositions_of_weight, Composition, Letter, Word};
use crate::{linalg, Error, Result};
use num_traits::{One, Zero};
use std::collections::{BTreeMap, HashMap};
use std::fmt;

/// The three integral bases of QSym handled by this module.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Basis {
    /// Monomial quasi-symmetric functions M_I.
    M,
    /// Fundamental quasi-symmetric functions F_I = Σ_{J ⪰ I} M_J.
    F,
    /// Essential quasi-symmetric functions E_I = Σ_{J ⪯ I} M_J.
    E,
}

impl Basis {
    pub fn letter(self) -> char {
        match self {
            Basis::M => 'M',
            Basis::F => 'F',
            Basis::E => 'E',
        }
    }
}

/// A quasi-symmetric expression: a rational linear combination of
/// compositions tagged with the basis the coefficients refer to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSymExpr {
    basis: Basis,
    terms: BTreeMap<Composition, Rat>,
}

impl QSymExpr {
    pub fn zero(basis: Basis) -> QSymExpr {
        QSymExpr {
            basis,
            terms: BTreeMap::new(),
        }
    }

    /// The unit: the empty composition with coefficient 1.
    pub fn unit(basis: Basis) -> QSymExpr {
        QSymExpr::from_composition(basis, Composition::empty())
    }

    pub fn from_composition(basis: Basis, comp: Composition) -> QSymExpr {
        let mut e = QSymExpr::zero(basis);
        e.add_term(comp, Rat::one());
        e
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Composition, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, comp: &Composition) -> Rat {
        self.terms.get(comp).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add_term(&mut self, comp: Composition, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(comp) {
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

    pub fn add_assign(&mut self, other: &QSymExpr) {
        debug_assert_eq!(self.basis, other.basis);
        for (i, c) in other.terms() {
            self.add_term(i.clone(), c.clone());
        }
    }

    pub fn sub_assign(&mut self, other: &QSymExpr) {
        debug_assert_eq!(self.basis, other.basis);
        for (i, c) in other.terms() {
            self.add_term(i.clone(), -c.clone());
        }
    }

    pub fn scale(&self, c: &Rat) -> QSymExpr {
        if c.is_zero() {
            return QSymExpr::zero(self.basis);
        }
        QSymExpr {
            basis: self.basis,
            terms: self.terms.iter().map(|(i, k)| (i.clone(), k * c)).collect(),
        }
    }

    /// The counit: the coefficient of the empty composition (the same in
    /// every basis).
    pub fn counit(&self) -> Rat {
        self.coeff(&Composition::empty())
    }

    pub fn max_weight(&self) -> u32 {
        self.terms.keys().map(Composition::weight).max().unwrap_or(0)
    }
}

impl fmt::Display for QSymExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use num_traits::Signed;
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (comp, c)) in self.terms.iter().enumerate() {
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
            if mag.is_one() {
                write!(f, "{}{}", self.basis.letter(), comp)?;
            } else {
                write!(f, "{}*{}{}", mag, self.basis.letter(), comp)?;
            }
        }
        Ok(())
    }
}

/// The harmonic (quasi-shuffle) product on Q<x,y>, extended bilinearly from
/// the word recursion: the unit law, w * x^n = x^n * w = w x^n, and
/// x^p y w₁ * x^q y w₂
///   = x^p y (w₁ * x^q y w₂) + x^q y (x^p y w₁ * w₂) + x^{p+q+1} y (w₁ * w₂).
pub fn star(p: &NCPoly, q: &NCPoly) -> NCPoly {
    let mut memo = HashMap::new();
    let mut out = NCPoly::zero();
    for (w1, c1) in p.terms() {
        for (w2, c2) in q.terms() {
            out.add_assign(&star_words(w1, w2, &mut memo).scale(&(c1 * c2)));
        }
    }
    out
}

fn star_words(w1: &Word, w2: &Word, memo: &mut HashMap<(Word, Word), NCPoly>) -> NCPoly {
    if w1.is_unit() {
        return NCPoly::from_word(w2.clone());
    }
    if w2.is_unit() {
        return NCPoly::from_word(w1.clone());
    }
    let pure_x = |w: &Word| w.letters().iter().all(|&a| a == Letter::X);
    if pure_x(w1) {
        return NCPoly::from_word(w2.concat(w1));
    }
    if pure_x(w2) {
        return NCPoly::from_word(w1.concat(w2));
    }
    let key = if w1 <= w2 {
        (w1.clone(), w2.clone())
    } else {
        (w2.clone(), w1.clone())
    };
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }
    // both words contain a y: split off the leading x^p y and x^q y
    let split = |w: &Word| {
        let p = w.letters().iter().position(|&a| a == Letter::Y).unwrap();
        let head = Word::from_letters(w.letters()[..=p].to_vec());
        let tail = Word::from_letters(w.letters()[p + 1..].to_vec());
        (p, head, tail)
    };
    let (p, head1, tail1) = split(&key.0);
    let (q, head2, tail2) = split(&key.1);
    let mut result = star_words(&tail1, &key.1, memo).concat_word_left(&head1);
    result.add_assign(&star_words(&key.0, &tail2, memo).concat_word_left(&head2));
    let merged = {
        let mut letters = vec![Letter::X; p + q + 1];
        letters.push(Letter::Y);
        Word::from_letters(letters)
    };
    result.add_assign(&star_words(&tail1, &tail2, memo).concat_word_left(&merged));
    memo.insert(key, result.clone());
    result
}

/// j-th power of y under the harmonic product.
pub fn y_star_power(j: usize) -> NCPoly {
    let mut out = NCPoly::one();
    for _ in 0..j {
        out = star(&out, &NCPoly::y());
    }
    out
}

/// Quasi-shuffle of two compositions: the product rule of the monomial
/// basis, M_I · M_J = Σ quasi-shuffles of I and J.
fn quasi_shuffle(i: &[u32], j: &[u32], out: &mut BTreeMap<Composition, Rat>, prefix: &mut Vec<u32>, coeff: &Rat) {
    if i.is_empty() {
        let mut parts = prefix.clone();
        parts.extend_from_slice(j);
        add_to(out, Composition::new(parts).unwrap(), coeff.clone());
        return;
    }
    if j.is_empty() {
        let mut parts = prefix.clone();
        parts.extend_from_slice(i);
        add_to(out, Composition::new(parts).unwrap(), coeff.clone());
        return;
    }
    prefix.push(i[0]);
    quasi_shuffle(&i[1..], j, out, prefix, coeff);
    prefix.pop();
    prefix.push(j[0]);
    quasi_shuffle(i, &j[1..], out, prefix, coeff);
    prefix.pop();
    prefix.push(i[0] + j[0]);
    quasi_shuffle(&i[1..], &j[1..], out, prefix, coeff);
    prefix.pop();
}

fn add_to(map: &mut BTreeMap<Composition, Rat>, key: Composition, c: Rat) {
    use std::collections::btree_map::Entry;
    if c.is_zero() {
        return;
    }
    match map.entry(key) {
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

/// The isomorphism φ onto QSym, z_{i₁}⋯z_{i_k} ↦ M_{(i_k,…,i₁)}; defined on
/// polynomials supported on words ending in y (or the unit).
pub fn phi(p: &NCPoly) -> Result<QSymExpr> {
    let mut out = QSymExpr::zero(Basis::M);
    for (w, c) in p.terms() {
        let comp = w.to_composition()?;
        out.add_term(comp.reversed(), c.clone());
    }
    Ok(out)
}

/// Inverse of [`phi`]: M_I ↦ the word of the reversed composition.
pub fn phi_inv(e: &QSymExpr) -> NCPoly {
    let m = convert_basis(e, Basis::M);
    let mut out = NCPoly::zero();
    for (i, c) in m.terms() {
        out.add_term(i.reversed().to_word(), c.clone());
    }
    out
}

/// Expansion in the polynomial ring Q[t₁,…,t_n]:
/// M_{(p₁,…,p_k)} ↦ Σ_{i₁<…<i_k ≤ n} t_{i₁}^{p₁}⋯t_{i_k}^{p_k};
/// compositions longer than n contribute nothing.
pub fn expand_in_variables(e: &QSymExpr, n: usize) -> VarPoly {
    let m = convert_basis(e, Basis::M);
    let mut out = VarPoly::zero(n);
    for (comp, c) in m.terms() {
        expand_monomial(comp, n, c, &mut out);
    }
    out
}

fn expand_monomial(comp: &Composition, n: usize, coeff: &Rat, out: &mut VarPoly) {
    let k = comp.length();
    if k > n {
        return;
    }
    let parts = comp.parts();
    let mut choice = Vec::with_capacity(k);
    fn rec(
        parts: &[u32],
        n: usize,
        from: usize,
        choice: &mut Vec<usize>,
        coeff: &Rat,
        out: &mut VarPoly,
    ) {
        if choice.len() == parts.len() {
            let mut expts = vec![0u32; n];
            for (pos, &var) in choice.iter().enumerate() {
                expts[var] = parts[pos];
            }
            out.add_term(expts, coeff.clone());
            return;
        }
        let needed = parts.len() - choice.len();
        for v in from..=(n - needed) {
            choice.push(v);
            rec(parts, n, v + 1, choice, coeff, out);
            choice.pop();
        }
    }
    rec(parts, n, 0, &mut choice, coeff, out);
}

/// Exact change of basis between M, F and E; round trips are the identity.
pub fn convert_basis(e: &QSymExpr, target: Basis) -> QSymExpr {
    if e.basis() == target {
        return e.clone();
    }
    let m = to_monomial(e);
    from_monomial(&m, target)
}

fn to_monomial(e: &QSymExpr) -> QSymExpr {
    let mut out = QSymExpr::zero(Basis::M);
    match e.basis() {
        Basis::M => return e.clone(),
        Basis::F => {
            for (i, c) in e.terms() {
                for j in i.refinements() {
                    out.add_term(j, c.clone());
                }
            }
        }
        Basis::E => {
            for (i, c) in e.terms() {
                for j in i.coarsenings() {
                    out.add_term(j, c.clone());
                }
            }
        }
    }
    out
}

fn from_monomial(m: &QSymExpr, target: Basis) -> QSymExpr {
    debug_assert_eq!(m.basis(), Basis::M);
    let mut out = QSymExpr::zero(target);
    match target {
        Basis::M => return m.clone(),
        // Möbius inversion over the refinement order:
        // M_I = Σ_{J ⪰ I} (-1)^{ℓ(J)-ℓ(I)} F_J = Σ_{J ⪯ I} (-1)^{ℓ(I)-ℓ(J)} E_J
        Basis::F => {
            for (i, c) in m.terms() {
                for j in i.refinements() {
                    let sign = if (j.length() - i.length()) % 2 == 0 { 1 } else { -1 };
                    out.add_term(j, c * rat_int(sign));
                }
            }
        }
        Basis::E => {
            for (i, c) in m.terms() {
                for j in i.coarsenings() {
                    let sign = if (i.length() - j.length()) % 2 == 0 { 1 } else { -1 };
                    out.add_term(j, c * rat_int(sign));
                }
            }
        }
    }
    out
}

/// Product of quasi-symmetric expressions; computed in the monomial basis
/// by the quasi-shuffle of compositions and converted back to the basis of
/// the left factor.
pub fn qsym_mul(a: &QSymExpr, b: &QSymExpr) -> QSymExpr {
    let ma = to_monomial(a);
    let mb = to_monomial(b);
    let mut terms = BTreeMap::new();
    for (i, ci) in ma.terms() {
        for (j, cj) in mb.terms() {
            let mut prefix = Vec::new();
            quasi_shuffle(i.parts(), j.parts(), &mut terms, &mut prefix, &(ci * cj));
        }
    }
    let mut m = QSymExpr::zero(Basis::M);
    for (comp, c) in terms {
        m.add_term(comp, c);
    }
    from_monomial(&m, a.basis())
}

/// Deconcatenation coproduct on polynomials supported on words ending in y:
/// z_{i₁}⋯z_{i_n} ↦ Σ_j z_{i₁}⋯z_{i_j} ⊗ z_{i_{j+1}}⋯z_{i_n}.
pub fn coproduct(p: &NCPoly) -> Result<TensorPoly> {
    let mut out = TensorPoly::zero();
    for (w, c) in p.terms() {
        let comp = w.to_composition()?;
        let parts = comp.parts();
        for j in 0..=parts.len() {
            let left = Composition::new(parts[..j].to_vec()).unwrap().to_word();
            let right = Composition::new(parts[j..].to_vec()).unwrap().to_word();
            out.add_term(left, right, c.clone());
        }
    }
    Ok(out)
}

/// Which of the two explicit antipode formulas to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AntipodeFormula {
    /// S(M_I) = Σ_{I₁⊔…⊔I_l = I} (-1)^l M_{I₁}·M_{I₂}⋯M_{I_l}.
    ConcatSplit,
    /// S(M_I) = (-1)^{ℓ(I)} E_{Ī}.
    Dual,
}

/// The antipode of QSym, by the selected formula, returned in the basis of
/// the input.  The two formulas agree.
pub fn antipode(e: &QSymExpr, formula: AntipodeFormula) -> QSymExpr {
    let m = to_monomial(e);
    let mut out = QSymExpr::zero(Basis::M);
    let mut memo: HashMap<Vec<u32>, QSymExpr> = HashMap::new();
    for (i, c) in m.terms() {
        let s = match formula {
            AntipodeFormula::ConcatSplit => antipode_concat_split(i.parts(), &mut memo),
            AntipodeFormula::Dual => {
                let sign = if i.length() % 2 == 0 { 1 } else { -1 };
                let mut s = QSymExpr::zero(Basis::M);
                for j in i.reversed().coarsenings() {
                    s.add_term(j, rat_int(sign));
                }
                s
            }
        };
        out.add_assign(&s.scale(c));
    }
    from_monomial(&out, e.basis())
}

/// Sum over splittings of I into consecutive nonempty blocks, by the
/// recursion S(I) = -Σ_{P⊔Q=I, P nonempty} M_P · S(Q), S(∅) = 1.
fn antipode_concat_split(parts: &[u32], memo: &mut HashMap<Vec<u32>, QSymExpr>) -> QSymExpr {
    if parts.is_empty() {
        return QSymExpr::unit(Basis::M);
    }
    if let Some(hit) = memo.get(parts) {
        return hit.clone();
    }
    let mut out = QSymExpr::zero(Basis::M);
    for cut in 1..=parts.len() {
        let head = QSymExpr::from_composition(
            Basis::M,
            Composition::new(parts[..cut].to_vec()).unwrap(),
        );
        let tail = antipode_concat_split(&parts[cut..], memo);
        out.sub_assign(&qsym_mul(&head, &tail));
    }
    memo.insert(parts.to_vec(), out.clone());
    out
}

/// The automorphism sending M_I to M_{Ī} (composition reversal).
pub fn t_reverse(e: &QSymExpr) -> QSymExpr {
    let m = to_monomial(e);
    let mut out = QSymExpr::zero(Basis::M);
    for (i, c) in m.terms() {
        out.add_term(i.reversed(), c.clone());
    }
    from_monomial(&out, e.basis())
}

/// The involution of QSym induced by the word map ψ (x ↦ x+y, y ↦ -y)
/// under the direct identification M_I ↔ z_{i₁}⋯z_{i_k}.  It satisfies
/// ψ(M_I) = (-1)^{ℓ(I)} F_I and ψ(E_I) = -E_{I*}.
pub fn psi_qsym(e: &QSymExpr) -> QSymExpr {
    let m = to_monomial(e);
    let psi = crate::poly::psi_hom();
    let mut out = QSymExpr::zero(Basis::M);
    for (i, c) in m.terms() {
        let image = psi.apply(&NCPoly::from_word(i.to_word()));
        for (w, cw) in image.terms() {
            let j = w.to_composition().expect("psi preserves words ending in y");
            out.add_term(j, c * cw);
        }
    }
    from_monomial(&out, e.basis())
}

/// Families of symmetric functions inside QSym, named by their classical
/// letters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymKind {
    /// Elementary e_n ↔ yⁿ.
    Elementary,
    /// Complete homogeneous h_n ↔ the sum of all words of weight n ending in y.
    Complete,
    /// Power sum p_n ↔ z_n = x^{n-1}y.
    PowerSum,
}

/// The word polynomial representing e_n, h_n or p_n (n = 0 gives the unit).
pub fn sym_generator(kind: SymKind, n: u32) -> NCPoly {
    if n == 0 {
        return NCPoly::one();
    }
    match kind {
        SymKind::Elementary => NCPoly::from_word(Word::y_power(n as usize)),
        SymKind::PowerSum => NCPoly::from_word(Word::z(n)),
        SymKind::Complete => {
            let mut out = NCPoly::zero();
            for comp in compositions_of_weight(n) {
                out.add_term(comp.to_word(), Rat::one());
            }
            out
        }
    }
}

/// A commutative polynomial in the power sums p₁, p₂, …; monomials are
/// keyed by the multiset of indices, stored as a weakly decreasing vector.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SymPowerExpr {
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl SymPowerExpr {
    pub fn zero() -> SymPowerExpr {
        SymPowerExpr::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rat)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, mut indices: Vec<u32>, c: Rat) {
        if c.is_zero() {
            return;
        }
        indices.sort_unstable_by(|a, b| b.cmp(a));
        use std::collections::btree_map::Entry;
        match self.terms.entry(indices) {
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

    /// Expansion in n variables, p_k ↦ t₁^k + … + t_n^k.
    pub fn expand_in_variables(&self, n: usize) -> VarPoly {
        let mut out = VarPoly::zero(n);
        for (indices, c) in self.terms() {
            let mut prod = VarPoly::constant(n, Rat::one());
            for &k in indices {
                let mut power_sum = VarPoly::zero(n);
                for v in 0..n {
                    let mut expts = vec![0u32; n];
                    expts[v] = k;
                    power_sum.add_term(expts, Rat::one());
                }
                prod = prod.mul(&power_sum);
            }
            out.add_assign(&prod.scale(c));
        }
        out
    }
}

impl fmt::Display for SymPowerExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use num_traits::Signed;
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (indices, c)) in self.terms.iter().enumerate() {
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
            let mono = if indices.is_empty() {
                "1".to_string()
            } else {
                let mut parts: Vec<String> = Vec::new();
                let mut run = 0usize;
                for j in 0..indices.len() {
                    run += 1;
                    if j + 1 == indices.len() || indices[j + 1] != indices[j] {
                        if run == 1 {
                            parts.push(format!("p{}", indices[j]));
                        } else {
                            parts.push(format!("p{}^{}", indices[j], run));
                        }
                        run = 0;
                    }
                }
                parts.join("*")
            };
            if mag.is_one() && !indices.is_empty() {
                write!(f, "{}", mono)?;
            } else if indices.is_empty() {
                write!(f, "{}", mag)?;
            } else {
                write!(f, "{}*{}", mag, mono)?;
            }
        }
        Ok(())
    }
}

/// Partitions of n as weakly decreasing vectors.
pub fn partitions_of(n: u32) -> Vec<Vec<u32>> {
    fn rec(remaining: u32, max: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if remaining == 0 {
            out.push(current.clone());
            return;
        }
        for next in (1..=remaining.min(max)).rev() {
            current.push(next);
            rec(remaining - next, next, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// If the expression is a symmetric function, return its exact expansion in
/// power sums; otherwise report a witness pair of monomials with unequal
/// coefficients.  Symmetry is decided by expanding the degree-d component
/// in d+1 variables and checking invariance under variable permutations.
pub fn to_power_sums(e: &QSymExpr) -> Result<SymPowerExpr> {
    let m = to_monomial(e);
    let mut out = SymPowerExpr::zero();
    let mut by_weight: BTreeMap<u32, QSymExpr> = BTreeMap::new();
    for (i, c) in m.terms() {
        by_weight
            .entry(i.weight())
            .or_insert_with(|| QSymExpr::zero(Basis::M))
            .add_term(i.clone(), c.clone());
    }
    for (d, component) in by_weight {
        if d == 0 {
            out.add_term(Vec::new(), component.counit());
            continue;
        }
        let nvars = d as usize + 1;
        let expansion = expand_in_variables(&component, nvars);
        if let Some((m1, m2)) = expansion.symmetry_witness() {
            return Err(Error::NotSymmetric(monomial_string(&m1), monomial_string(&m2)));
        }
        // solve for the expansion in the p-monomial basis of degree d
        let partitions = partitions_of(d);
        let basis_vecs: Vec<QSymExpr> = partitions
            .iter()
            .map(|lambda| {
                let mut prod = QSymExpr::unit(Basis::M);
                for &k in lambda {
                    prod = qsym_mul(
                        &prod,
                        &QSymExpr::from_composition(Basis::M, Composition::new(vec![k]).unwrap()),
                    );
                }
                prod
            })
            .collect();
        let mut columns: BTreeMap<Composition, usize> = BTreeMap::new();
        for v in basis_vecs.iter().chain(std::iter::once(&component)) {
            for (i, _) in v.terms() {
                let next = columns.len();
                columns.entry(i.clone()).or_insert(next);
            }
        }
        let ncols = columns.len();
        // one equation per composition, one unknown per partition
        let mut a = vec![vec![Rat::zero(); partitions.len()]; ncols];
        for (col, v) in basis_vecs.iter().enumerate() {
            for (i, c) in v.terms() {
                a[columns[i]][col] = c.clone();
            }
        }
        let mut b = vec![Rat::zero(); ncols];
        for (i, c) in component.terms() {
            b[columns[i]] = c.clone();
        }
        let solution = linalg::solve(&a, &b).ok_or_else(|| {
            Error::domain("symmetric component is not in the span of power-sum monomials")
        })?;
        for (lambda, coeff) in partitions.into_iter().zip(solution) {
            out.add_term(lambda, coeff);
        }
    }
    Ok(out)
}

/// Write an element of ℍ¹ uniquely as Σ_j c_j * y^{*j} with every c_j
/// supported on admissible words; the multiplications are harmonic
/// products.  Returns the nonzero (c_j, j) pairs in increasing j.
pub fn decompose_h1_over_h0(p: &NCPoly) -> Result<Vec<(NCPoly, usize)>> {
    if !p.in_h1() {
        return Err(Error::domain(
            "polynomial has support outside the words ending in y",
        ));
    }
    let mut rest = p.clone();
    let mut coeffs: BTreeMap<usize, NCPoly> = BTreeMap::new();
    let mut y_powers: Vec<NCPoly> = vec![NCPoly::one()];
    while !rest.is_zero() {
        let m = rest.terms().map(|(w, _)| w.leading_ys()).max().unwrap();
        if m == 0 {
            let entry = coeffs.entry(0).or_insert_with(NCPoly::zero);
            entry.add_assign(&rest);
            break;
        }
        // extract the terms with exactly m leading y's and strip the prefix
        let mut u = NCPoly::zero();
        for (w, c) in rest.terms() {
            if w.leading_ys() == m {
                u.add_term(Word::from_letters(w.letters()[m..].to_vec()), c.clone());
            }
        }
        let mut factorial = Rat::one();
        for i in 1..=m {
            factorial *= rat_int(i as i64);
        }
        let c_m = u.scale(&factorial.recip());
        while y_powers.len() <= m {
            let next = star(y_powers.last().unwrap(), &NCPoly::y());
            y_powers.push(next);
        }
        rest.sub_assign(&star(&c_m, &y_powers[m]));
        let entry = coeffs.entry(m).or_insert_with(NCPoly::zero);
        entry.add_assign(&c_m);
    }
    Ok(coeffs
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(j, c)| (c, j))
        .collect())
}
