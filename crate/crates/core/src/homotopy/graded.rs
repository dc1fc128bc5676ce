use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{tensor_dim, unflatten, LinearMap, Rational};

/// Finite-dimensional graded space; basis vectors are ordered block by block
/// in the order of `support`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedSpace {
    support: Vec<(i64, usize)>,
}

impl GradedSpace {
    pub fn new(support: Vec<(i64, usize)>) -> Result<Self> {
        let mut seen = std::collections::BTreeSet::new();
        for (deg, _) in &support {
            if !seen.insert(*deg) {
                return Err(Error::Degree(format!("degree {deg} listed twice in the support")));
            }
        }
        Ok(GradedSpace { support })
    }

    /// `K^d` in degree 0.
    pub fn concentrated(dim: usize) -> Self {
        GradedSpace { support: vec![(0, dim)] }
    }

    pub fn support(&self) -> &[(i64, usize)] {
        &self.support
    }

    pub fn dim(&self) -> usize {
        self.support.iter().map(|(_, n)| n).sum()
    }

    /// Degree of each basis vector.
    pub fn degrees(&self) -> Vec<i64> {
        self.support.iter().flat_map(|&(deg, n)| std::iter::repeat_n(deg, n)).collect()
    }

    /// Every degree moved by `by`; `shifted(-1)` is the desuspension.
    pub fn shifted(&self, by: i64) -> Self {
        GradedSpace { support: self.support.iter().map(|&(deg, n)| (deg + by, n)).collect() }
    }

    /// Total degree of the basis tensor with flat index `flat` in `V^{⊗arity}`.
    pub fn tensor_degree(&self, degrees: &[i64], arity: usize, flat: usize) -> i64 {
        unflatten(self.dim(), arity, flat).iter().map(|&c| degrees[c]).sum()
    }

    /// Checks that `map : V → V^{⊗arity}` is homogeneous of degree `shift`.
    pub fn check_homogeneous(&self, what: &str, map: &LinearMap, arity: usize, shift: i64) -> Result<()> {
        let d = self.dim();
        if map.dom() != d || map.cod() != tensor_dim(d, arity) {
            return Err(Error::Dimension(format!(
                "{what} must be a map {d} → {}, got {} → {}",
                tensor_dim(d, arity),
                map.dom(),
                map.cod()
            )));
        }
        let degrees = self.degrees();
        for (from, to, _) in map.images() {
            let found = self.tensor_degree(&degrees, arity, to) - degrees[from];
            if found != shift {
                return Err(Error::Degree(format!(
                    "{what} sends basis vector {from} to tensor {to}, a map of degree {found} instead of {shift}"
                )));
            }
        }
        Ok(())
    }

    /// Random homogeneous map `V → V^{⊗arity}` of degree `shift`.
    pub fn random_map<R: Rng + ?Sized>(&self, rng: &mut R, arity: usize, shift: i64, density: f64) -> LinearMap {
        let degrees = self.degrees();
        let raw = LinearMap::random(rng, self.dim(), tensor_dim(self.dim(), arity), density);
        let images = raw
            .images()
            .into_iter()
            .filter(|(from, to, _)| self.tensor_degree(&degrees, arity, *to) - degrees[*from] == shift);
        LinearMap::from_images(raw.dom(), raw.cod(), images).expect("same shape")
    }
}

/// `(id^{⊗r} ⊗ f ⊗ id^{⊗t}) ∘ g` with the Koszul sign `(−1)^{|f|(|x_1|+…+|x_r|)}`
/// on a basis tensor `x_1 ⊗ … ⊗ x_{r+1+t}`.
pub fn pad_graded_then(
    space: &GradedSpace,
    f: &LinearMap,
    f_degree: i64,
    r: usize,
    t: usize,
    g: &LinearMap,
) -> Result<LinearMap> {
    let (d, degrees) = (space.dim(), space.degrees());
    let odd = f_degree.rem_euclid(2) == 1;
    f.pad_then_signed(tensor_dim(d, r), tensor_dim(d, t), g, |a| {
        odd && space.tensor_degree(&degrees, r, a).rem_euclid(2) == 1
    })
}

/// `id^{⊗r} ⊗ f ⊗ id^{⊗t}` with Koszul signs, on `V^{⊗(r+1+t)}`.
pub fn pad_graded(space: &GradedSpace, f: &LinearMap, f_degree: i64, r: usize, t: usize) -> LinearMap {
    let d = space.dim();
    let id = LinearMap::identity(tensor_dim(d, r + 1 + t));
    pad_graded_then(space, f, f_degree, r, t, &id).expect("identity has matching shape")
}

/// `(−1)^e` for a possibly negative exponent.
pub(crate) fn parity_sign(e: i64) -> Rational {
    Rational::sign(e.rem_euclid(2) as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::flatten;

    #[test]
    fn degrees_follow_support_order() {
        let v = GradedSpace::new(vec![(1, 2), (-1, 1)]).unwrap();
        assert_eq!(v.degrees(), vec![1, 1, -1]);
        assert_eq!(v.shifted(-1).degrees(), vec![0, 0, -2]);
        assert!(GradedSpace::new(vec![(0, 1), (0, 2)]).is_err());
    }

    #[test]
    fn koszul_sign_of_padding() {
        // V = span{a (deg 0), b (deg 1)}; f = id viewed as a map of degree 1 on the second factor
        let v = GradedSpace::new(vec![(0, 1), (1, 1)]).unwrap();
        let f = LinearMap::identity(2);
        let padded = pad_graded(&v, &f, 1, 1, 0);
        // (id ⊗ f)(b ⊗ a) = −b ⊗ f(a), (id ⊗ f)(a ⊗ b) = a ⊗ f(b)
        let ba = flatten(2, &[1, 0]);
        let ab = flatten(2, &[0, 1]);
        assert_eq!(padded.image(ba), &[(ba, -Rational::one())]);
        assert_eq!(padded.image(ab), &[(ab, Rational::one())]);
        // even maps carry no sign
        let even = pad_graded(&v, &f, 2, 1, 0);
        assert_eq!(even, LinearMap::identity(4));
    }

    #[test]
    fn homogeneity_is_enforced() {
        let v = GradedSpace::new(vec![(0, 1), (1, 1)]).unwrap();
        // b ↦ a ⊗ b has degree 0, a ↦ a ⊗ b has degree 1
        let good = LinearMap::unit(2, 4, 1, flatten(2, &[0, 1]));
        let bad = LinearMap::unit(2, 4, 0, flatten(2, &[0, 1]));
        assert!(v.check_homogeneous("op", &good, 2, 0).is_ok());
        assert!(matches!(v.check_homogeneous("op", &bad, 2, 0), Err(Error::Degree(_))));
    }
}
