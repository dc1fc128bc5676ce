//! Non-symmetric operads with multiplication.
//!
//! An [`Operad`] supplies partial compositions `f •_i g` and a unit; the
//! free functions here build everything else on top: the pre-Lie product
//! `•`, the degree −1 bracket, the differential `d_π` of a multiplication,
//! the cup product, and checkers for the operad axioms and the pre-Lie,
//! Jacobi and Leibniz-type identities.

use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg::Rational;

/// Elements of one arity component `O(n)`; linear operations refuse mixed arities.
pub trait OperadElement: Clone + PartialEq + fmt::Debug {
    fn arity(&self) -> usize;
    fn add_scaled(&self, a: &Rational, other: &Self) -> Result<Self>;
    fn scale(&self, a: &Rational) -> Self;
    fn is_zero(&self) -> bool;

    fn add(&self, other: &Self) -> Result<Self> {
        self.add_scaled(&Rational::one(), other)
    }

    fn sub(&self, other: &Self) -> Result<Self> {
        self.add_scaled(&-Rational::one(), other)
    }
}

pub trait Operad {
    type Elem: OperadElement;

    fn unit(&self) -> Self::Elem;
    fn zero(&self, arity: usize) -> Self::Elem;
    /// `f •_i g` for `1 ≤ i ≤ arity(f)`.
    fn partial(&self, f: &Self::Elem, g: &Self::Elem, i: usize) -> Result<Self::Elem>;
    fn random<R: Rng + ?Sized>(&self, arity: usize, rng: &mut R) -> Self::Elem;
}

pub(crate) fn check_position(i: usize, m: usize) -> Result<()> {
    if i == 0 || i > m {
        return Err(Error::Position { position: i, max: m });
    }
    Ok(())
}

pub(crate) fn check_arity(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::Arity { expected, found });
    }
    Ok(())
}

/// `f • g = Σ_i (−1)^{(i−1)(n−1)} f •_i g`.
pub fn dot<O: Operad>(op: &O, f: &O::Elem, g: &O::Elem) -> Result<O::Elem> {
    let (m, n) = (f.arity(), g.arity());
    let mut acc = op.zero(m + n - 1);
    for i in 1..=m {
        let term = op.partial(f, g, i)?;
        acc = acc.add_scaled(&Rational::sign((i - 1) * (n - 1)), &term)?;
    }
    Ok(acc)
}

/// `[f, g] = f • g − (−1)^{(m−1)(n−1)} g • f`.
pub fn bracket<O: Operad>(op: &O, f: &O::Elem, g: &O::Elem) -> Result<O::Elem> {
    let (m, n) = (f.arity(), g.arity());
    let fg = dot(op, f, g)?;
    let gf = dot(op, g, f)?;
    fg.add_scaled(&-Rational::sign((m - 1) * (n - 1)), &gf)
}

/// An element `π ∈ O(2)` with `π •_1 π = π •_2 π`.
#[derive(Clone, Debug, PartialEq)]
pub struct Multiplication<E> {
    pi: E,
}

impl<E: OperadElement> Multiplication<E> {
    pub fn new<O: Operad<Elem = E>>(op: &O, pi: E) -> Result<Self> {
        check_arity(2, pi.arity())?;
        if op.partial(&pi, &pi, 1)? != op.partial(&pi, &pi, 2)? {
            return Err(Error::NotMultiplication);
        }
        Ok(Multiplication { pi })
    }

    pub fn pi(&self) -> &E {
        &self.pi
    }

    pub fn into_inner(self) -> E {
        self.pi
    }
}

/// `d_π f = π • f − (−1)^{k−1} f • π` for `f ∈ O(k)`.
pub fn d_pi<O: Operad>(op: &O, pi: &Multiplication<O::Elem>, f: &O::Elem) -> Result<O::Elem> {
    let k = f.arity();
    let a = dot(op, pi.pi(), f)?;
    let b = dot(op, f, pi.pi())?;
    a.add_scaled(&-Rational::sign(k - 1), &b)
}

/// `δ_π f = (−1)^{k−1} d_π f`, the normalization under which `δ_π` agrees with
/// the coHochschild and dendriform coboundaries on self coefficients.
pub fn delta_pi<O: Operad>(op: &O, pi: &Multiplication<O::Elem>, f: &O::Elem) -> Result<O::Elem> {
    Ok(d_pi(op, pi, f)?.scale(&Rational::sign(f.arity() - 1)))
}

/// Sign of the cup product `f · g = CUP_SIGN · (π •_2 g) •_1 f`, fixed so that
/// `δ_π(f • g) = f • δ_π g − δ_π f • g + g · f − f · g` holds on `O(2)`.
pub const CUP_SIGN: i64 = 1;

/// `f · g = CUP_SIGN · (π •_2 g) •_1 f`.
pub fn cup<O: Operad>(op: &O, pi: &Multiplication<O::Elem>, f: &O::Elem, g: &O::Elem) -> Result<O::Elem> {
    let inner = op.partial(pi.pi(), g, 2)?;
    Ok(op.partial(&inner, f, 1)?.scale(&Rational::from_int(CUP_SIGN)))
}

/// `(f•g)•h − f•(g•h) − (−1)^{(n−1)(p−1)} ((f•h)•g − f•(h•g))`; zero in any operad.
pub fn pre_lie_defect<O: Operad>(op: &O, f: &O::Elem, g: &O::Elem, h: &O::Elem) -> Result<O::Elem> {
    let (n, p) = (g.arity(), h.arity());
    let assoc = |x: &O::Elem, y: &O::Elem| -> Result<O::Elem> {
        let left = dot(op, &dot(op, f, x)?, y)?;
        let right = dot(op, f, &dot(op, x, y)?)?;
        left.sub(&right)
    };
    let lhs = assoc(g, h)?;
    let rhs = assoc(h, g)?;
    lhs.add_scaled(&-Rational::sign((n - 1) * (p - 1)), &rhs)
}

/// Graded Jacobi sum `Σ_cyc (−1)^{|f||h|} [[f,g],h]` with `|f| = arity − 1`.
pub fn jacobi_defect<O: Operad>(op: &O, f: &O::Elem, g: &O::Elem, h: &O::Elem) -> Result<O::Elem> {
    let deg = |x: &O::Elem| x.arity() - 1;
    let term = |a: &O::Elem, b: &O::Elem, c: &O::Elem| -> Result<O::Elem> {
        Ok(bracket(op, &bracket(op, a, b)?, c)?.scale(&Rational::sign(deg(a) * deg(c))))
    };
    term(f, g, h)?.add(&term(g, h, f)?)?.add(&term(h, f, g)?)
}

/// `δ_π(f•g) − (f • δ_π g − δ_π f • g + g·f − f·g)` for `f, g ∈ O(2)`.
pub fn mul_circ_defect<O: Operad>(op: &O, pi: &Multiplication<O::Elem>, f: &O::Elem, g: &O::Elem) -> Result<O::Elem> {
    check_arity(2, f.arity())?;
    check_arity(2, g.arity())?;
    let lhs = delta_pi(op, pi, &dot(op, f, g)?)?;
    let rhs = dot(op, f, &delta_pi(op, pi, g)?)?
        .sub(&dot(op, &delta_pi(op, pi, f)?, g)?)?
        .add(&cup(op, pi, g, f)?)?
        .sub(&cup(op, pi, f, g)?)?;
    lhs.sub(&rhs)
}

/// Outcome of an exhaustive operad-axiom check over a sample set.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub checked: usize,
    pub violations: Vec<String>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the sequential, parallel and unit axioms for every triple of samples
/// and every admissible pair of positions.
pub fn check_operad_axioms<O: Operad>(op: &O, samples: &[O::Elem]) -> Result<AxiomReport> {
    let mut report = AxiomReport::default();
    let unit = op.unit();
    for (a, f) in samples.iter().enumerate() {
        let m = f.arity();
        report.checked += 1;
        if op.partial(&unit, f, 1)? != *f {
            report.violations.push(format!("unit: id •_1 f != f (sample {a})"));
        }
        for i in 1..=m {
            report.checked += 1;
            if op.partial(f, &unit, i)? != *f {
                report.violations.push(format!("unit: f •_{i} id != f (sample {a})"));
            }
        }
        for (b, g) in samples.iter().enumerate() {
            let n = g.arity();
            for (c, h) in samples.iter().enumerate() {
                for i in 1..=m {
                    let fg = op.partial(f, g, i)?;
                    for j in 1..=n {
                        report.checked += 1;
                        let lhs = op.partial(&fg, h, i + j - 1)?;
                        let rhs = op.partial(f, &op.partial(g, h, j)?, i)?;
                        if lhs != rhs {
                            report.violations.push(format!("sequential: i={i}, j={j} (samples {a},{b},{c})"));
                        }
                    }
                    for j in i + 1..=m {
                        report.checked += 1;
                        let lhs = op.partial(&fg, h, j + n - 1)?;
                        let rhs = op.partial(&op.partial(f, h, j)?, g, i)?;
                        if lhs != rhs {
                            report.violations.push(format!("parallel: i={i}, j={j} (samples {a},{b},{c})"));
                        }
                    }
                }
            }
        }
    }
    Ok(report)
}

/// Random elements with arities cycling through `1..=max_arity`.
pub fn random_samples<O: Operad, R: Rng + ?Sized>(op: &O, max_arity: usize, count: usize, rng: &mut R) -> Vec<O::Elem> {
    (0..count).map(|k| op.random(1 + k % max_arity, rng)).collect()
}
