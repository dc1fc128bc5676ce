use std::collections::BTreeMap;

use super::dendinf::DendInf1Coalgebra;
use super::graded::parity_sign;
use crate::error::{Error, Result};
use crate::linalg::{flatten, tensor_dim, unflatten, LinearMap, Rational};
use crate::report::CheckReport;

/// Basis element `x_1⋯x_p ⊗ y ⊗ z_1⋯z_q` of `TV ⊗ V ⊗ TV`; letters are basis indices of `V`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DiassWord {
    pub left: Vec<usize>,
    pub mark: usize,
    pub right: Vec<usize>,
}

impl DiassWord {
    pub fn generator(v: usize) -> Self {
        DiassWord { left: Vec::new(), mark: v, right: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.left.len() + 1 + self.right.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// 1-based position of the marked letter.
    pub fn mark_position(&self) -> usize {
        self.left.len() + 1
    }

    /// All letters in order, forgetting the mark.
    pub fn letters(&self) -> Vec<usize> {
        let mut out = self.left.clone();
        out.push(self.mark);
        out.extend(&self.right);
        out
    }

    /// `Π_i(v_1⋯v_k) = v_1⋯v_{i−1} ⊗ v_i ⊗ v_{i+1}⋯v_k`.
    pub fn mark_at(letters: &[usize], i: usize) -> Result<Self> {
        if i == 0 || i > letters.len() {
            return Err(Error::Position { position: i, max: letters.len() });
        }
        Ok(DiassWord { left: letters[..i - 1].to_vec(), mark: letters[i - 1], right: letters[i..].to_vec() })
    }

    /// `u ⊣ w`: the mark of `u` survives.
    pub fn left_product(&self, other: &DiassWord) -> DiassWord {
        let mut right = self.right.clone();
        right.extend(other.letters());
        DiassWord { left: self.left.clone(), mark: self.mark, right }
    }

    /// `u ⊢ w`: the mark of `w` survives.
    pub fn right_product(&self, other: &DiassWord) -> DiassWord {
        let mut left = self.letters();
        left.extend(&other.left);
        DiassWord { left, mark: other.mark, right: other.right.clone() }
    }
}

/// `Π_i` on basis words.
pub fn pi_map(i: usize, letters: &[usize]) -> Result<DiassWord> {
    DiassWord::mark_at(letters, i)
}

/// Finite linear combination of words of length at most `max_len`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct DiassElement {
    terms: BTreeMap<DiassWord, Rational>,
}

impl DiassElement {
    pub fn word(w: DiassWord) -> Self {
        DiassElement { terms: BTreeMap::from([(w, Rational::one())]) }
    }

    pub fn terms(&self) -> &BTreeMap<DiassWord, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: DiassWord, c: Rational) {
        let entry = self.terms.entry(w).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add_scaled(&mut self, c: &Rational, other: &DiassElement) {
        for (w, v) in &other.terms {
            self.add_term(w.clone(), c * v);
        }
    }

    fn product(
        &self,
        other: &DiassElement,
        max_len: usize,
        f: impl Fn(&DiassWord, &DiassWord) -> DiassWord,
    ) -> Result<Self> {
        let mut out = DiassElement::default();
        for (u, a) in &self.terms {
            for (w, b) in &other.terms {
                if u.len() + w.len() > max_len {
                    return Err(Error::Truncation(format!(
                        "product of words of lengths {} and {} exceeds {max_len}",
                        u.len(),
                        w.len()
                    )));
                }
                out.add_term(f(u, w), a * b);
            }
        }
        Ok(out)
    }

    /// `⊣`, refusing results longer than `max_len`.
    pub fn left_product(&self, other: &DiassElement, max_len: usize) -> Result<Self> {
        self.product(other, max_len, DiassWord::left_product)
    }

    /// `⊢`, refusing results longer than `max_len`.
    pub fn right_product(&self, other: &DiassElement, max_len: usize) -> Result<Self> {
        self.product(other, max_len, DiassWord::right_product)
    }
}

/// The derivation `D = Σ_k D̃_k` of `Diass(V)` built from a Dend_∞[1] structure,
/// on words of length at most `max_len`.
pub struct Derivation<'a> {
    ops: &'a DendInf1Coalgebra,
    degrees: Vec<i64>,
    max_len: usize,
}

impl<'a> Derivation<'a> {
    pub fn new(ops: &'a DendInf1Coalgebra, max_len: usize) -> Self {
        Derivation { degrees: ops.space().degrees(), ops, max_len }
    }

    /// `Δ_k(v) = Σ_r Π_r Δ_{k,[r]}(v)` on a generator.
    pub fn on_generator(&self, k: usize, v: usize) -> Result<DiassElement> {
        let dim = self.ops.space().dim();
        let mut out = DiassElement::default();
        for r in 1..=k {
            for (to, c) in self.ops.labeled().op(k, r)?.image(v) {
                out.add_term(pi_map(r, &unflatten(dim, k, *to))?, c.clone());
            }
        }
        Ok(out)
    }

    /// `D̃_k(x_1⋯x_N) = Σ_i (−1)^{|x_1|+…+|x_{i−1}|} x_1⋯Δ_k(x_i)⋯x_N`: the marked
    /// letter receives `Σ_r Π_r Δ_{k,[r]}`, an unmarked one the label sum `Δ_k`.
    pub fn apply_arity(&self, k: usize, x: &DiassElement) -> Result<DiassElement> {
        let dim = self.ops.space().dim();
        let total = self.ops.labeled().total(k)?;
        let mut out = DiassElement::default();
        for (word, c) in x.terms() {
            if word.len() + k - 1 > self.max_len {
                return Err(Error::Truncation(format!(
                    "D̃_{k} on a word of length {} exceeds {}",
                    word.len(),
                    self.max_len
                )));
            }
            let letters = word.letters();
            let mark = word.mark_position();
            let mut before = 0i64;
            for (pos, &x_i) in letters.iter().enumerate() {
                let sign = parity_sign(before);
                let (prefix, suffix) = (&letters[..pos], &letters[pos + 1..]);
                if pos + 1 == mark {
                    for (w, v) in self.on_generator(k, x_i)?.terms() {
                        let mut left = prefix.to_vec();
                        left.extend(&w.left);
                        let mut right = w.right.clone();
                        right.extend(suffix);
                        out.add_term(DiassWord { left, mark: w.mark, right }, &sign * &(c * v));
                    }
                } else {
                    for (to, v) in total.image(x_i) {
                        let mut all = prefix.to_vec();
                        all.extend(unflatten(dim, k, *to));
                        all.extend(suffix);
                        let new_mark = if pos + 1 < mark { mark + k - 1 } else { mark };
                        out.add_term(DiassWord::mark_at(&all, new_mark)?, &sign * &(c * v));
                    }
                }
                before += self.degrees[x_i];
            }
        }
        Ok(out)
    }

    /// `Σ_{s+l=n+1} D̃_s D̃_l (1 ⊗ v ⊗ 1)`, the length-`n` part of `D∘D` on a generator.
    pub fn square_on_generator(&self, n: usize, v: usize) -> Result<DiassElement> {
        let start = DiassElement::word(DiassWord::generator(v));
        let mut out = DiassElement::default();
        for l in 1..=n {
            let s = n + 1 - l;
            let inner = self.apply_arity(l, &start)?;
            out.add_scaled(&Rational::one(), &self.apply_arity(s, &inner)?);
        }
        Ok(out)
    }

    /// The component of `v ↦ (D∘D)(1 ⊗ v ⊗ 1)` in `V^{⊗(θ−1)} ⊗ V ⊗ V^{⊗(n−θ)}`, as a map `V → V^{⊗n}`.
    pub fn square_component(&self, n: usize, theta: usize) -> Result<LinearMap> {
        let dim = self.ops.space().dim();
        let mut images = Vec::new();
        for v in 0..dim {
            for (w, c) in self.square_on_generator(n, v)?.terms() {
                if w.mark_position() == theta && w.len() == n {
                    images.push((v, flatten(dim, &w.letters()), c.clone()));
                }
            }
        }
        LinearMap::from_images(dim, tensor_dim(dim, n), images)
    }
}

/// `D∘D = 0` on generators, one verdict per `(n, θ)` named `D^2 n=N [θ]`, for
/// `n ≤ n_max`. Identities with `n` above the word truncation or the stored arity
/// are listed as not checked.
pub fn check_d_squared(ops: &DendInf1Coalgebra, max_len: usize, n_max: usize) -> Result<CheckReport> {
    let der = Derivation::new(ops, max_len);
    let mut report = CheckReport::default();
    for n in 1..=n_max {
        for theta in 1..=n {
            let name = format!("D^2 n={n} [{theta}]");
            if n > max_len || n > ops.max_arity() {
                report.skip(name);
            } else {
                report.push(name, der.square_component(n, theta)?.is_zero());
            }
        }
    }
    Ok(report)
}

/// Checks the five diassociative identities on a triple of words.
pub fn diassociative_defects(a: &DiassWord, b: &DiassWord, c: &DiassWord) -> [bool; 5] {
    let l = DiassWord::left_product;
    let r = DiassWord::right_product;
    [
        l(a, &l(b, c)) == l(&l(a, b), c),
        l(&l(a, b), c) == l(a, &r(b, c)),
        l(&r(a, b), c) == r(a, &l(b, c)),
        r(&l(a, b), c) == r(a, &r(b, c)),
        r(a, &r(b, c)) == r(&r(a, b), c),
    ]
}
