//! Labels `[1], …, [n]` of the index set `C_n` and the label maps used by
//! labeled partial compositions.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Rational;

/// A formal linear combination of labels, an element of `K[C_n]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelSum {
    arity: usize,
    terms: Vec<(usize, Rational)>,
}

impl LabelSum {
    pub fn single(arity: usize, label: usize) -> Result<Self> {
        check_label(label, arity)?;
        Ok(LabelSum { arity, terms: vec![(label, Rational::one())] })
    }

    /// `[1] + [2] + … + [n]`.
    pub fn full(arity: usize) -> Self {
        LabelSum { arity, terms: (1..=arity).map(|r| (r, Rational::one())).collect() }
    }

    pub fn from_terms(arity: usize, terms: Vec<(usize, Rational)>) -> Result<Self> {
        for (r, _) in &terms {
            check_label(*r, arity)?;
        }
        let mut merged: Vec<(usize, Rational)> = Vec::new();
        let mut sorted = terms;
        sorted.sort_by_key(|t| t.0);
        for (r, c) in sorted {
            match merged.last_mut() {
                Some((s, acc)) if *s == r => *acc += c,
                _ => merged.push((r, c)),
            }
        }
        merged.retain(|(_, c)| !c.is_zero());
        Ok(LabelSum { arity, terms: merged })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn terms(&self) -> &[(usize, Rational)] {
        &self.terms
    }

    pub fn is_full(&self) -> bool {
        self.terms.len() == self.arity && self.terms.iter().enumerate().all(|(k, (r, c))| *r == k + 1 && c.is_one())
    }
}

pub(crate) fn check_label(label: usize, max: usize) -> Result<()> {
    if label == 0 || label > max {
        return Err(Error::Label { label, max });
    }
    Ok(())
}

fn check_args(m: usize, n: usize, i: usize, r: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::DegreeZero);
    }
    crate::operad::check_position(i, m)?;
    check_label(r, m + n - 1)
}

/// `R_0(m; 1,…,n,…,1)[r]` with `n` in position `i`: the label of the outer factor.
pub fn r0(m: usize, n: usize, i: usize, r: usize) -> Result<usize> {
    check_args(m, n, i, r)?;
    Ok(if r < i {
        r
    } else if r < i + n {
        i
    } else {
        r - n + 1
    })
}

/// `R_i(m; 1,…,n,…,1)[r]`: the label sum fed to the inner factor.
pub fn ri(m: usize, n: usize, i: usize, r: usize) -> Result<LabelSum> {
    check_args(m, n, i, r)?;
    if r < i || r >= i + n {
        Ok(LabelSum::full(n))
    } else {
        LabelSum::single(n, r + 1 - i)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn r0_examples() {
        assert_eq!(r0(2, 2, 2, 3).unwrap(), 2);
        let v: Vec<_> = (1..=3).map(|r| r0(2, 2, 1, r).unwrap()).collect();
        assert_eq!(v, vec![1, 1, 2]);
        for m in 1..5 {
            for i in 1..=m {
                for r in 1..=m {
                    assert_eq!(r0(m, 1, i, r).unwrap(), r);
                }
            }
        }
    }

    #[test]
    fn ri_examples() {
        assert_eq!(ri(2, 2, 2, 1).unwrap(), LabelSum::full(2));
        let v: Vec<_> = (1..=3).map(|r| ri(2, 2, 1, r).unwrap()).collect();
        assert_eq!(v, vec![LabelSum::single(2, 1).unwrap(), LabelSum::single(2, 2).unwrap(), LabelSum::full(2)]);
        for m in 1..4 {
            for n in 1..4 {
                for i in 1..=m {
                    assert_eq!(ri(m, n, i, i).unwrap(), LabelSum::single(n, 1).unwrap());
                }
            }
        }
    }

    #[test]
    fn out_of_range_arguments() {
        assert!(r0(2, 2, 3, 1).is_err());
        assert!(r0(2, 2, 1, 4).is_err());
        assert!(ri(2, 2, 0, 1).is_err());
        assert!(LabelSum::single(2, 3).is_err());
    }

    #[test]
    fn label_sums_merge_terms() {
        let s =
            LabelSum::from_terms(3, vec![(2, Rational::one()), (1, Rational::one()), (2, -Rational::one())]).unwrap();
        assert_eq!(s.terms(), &[(1, Rational::one())]);
        assert!(LabelSum::full(3).is_full());
        assert!(!s.is_full());
    }
}
