/// Position of a basis tensor `e_{i_1} ⊗ … ⊗ e_{i_n}` inside `V^{⊗n}`, `dim V = d`.
///
/// Components are 0-based. The flat index is `Σ i_k d^{n-k}`: the leftmost
/// factor is the most significant digit. Every module uses this ordering.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TensorIndex {
    pub dim: usize,
    pub components: Vec<usize>,
}

impl TensorIndex {
    pub fn new(dim: usize, components: Vec<usize>) -> Self {
        debug_assert!(components.iter().all(|&c| c < dim));
        TensorIndex { dim, components }
    }

    pub fn arity(&self) -> usize {
        self.components.len()
    }

    pub fn flat(&self) -> usize {
        flatten(self.dim, &self.components)
    }

    pub fn from_flat(dim: usize, arity: usize, flat: usize) -> Self {
        TensorIndex { dim, components: unflatten(dim, arity, flat) }
    }
}

pub fn flatten(dim: usize, components: &[usize]) -> usize {
    components.iter().fold(0, |acc, &c| acc * dim + c)
}

pub fn unflatten(dim: usize, arity: usize, mut flat: usize) -> Vec<usize> {
    let mut out = vec![0; arity];
    for slot in out.iter_mut().rev() {
        *slot = flat % dim;
        flat /= dim;
    }
    out
}

/// `d^n`.
pub fn tensor_dim(d: usize, n: usize) -> usize {
    d.pow(n as u32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn leftmost_is_most_significant() {
        assert_eq!(flatten(3, &[1, 0, 2]), 9 + 2);
        assert_eq!(unflatten(3, 3, 11), vec![1, 0, 2]);
    }

    proptest! {
        #[test]
        fn flatten_is_a_bijection(d in 1usize..5, n in 0usize..5, seed in any::<u64>()) {
            let size = tensor_dim(d, n);
            let flat = (seed as usize) % size.max(1);
            let t = TensorIndex::from_flat(d, n, flat);
            prop_assert_eq!(t.flat(), if n == 0 { 0 } else { flat });
            prop_assert!(t.components.iter().all(|&c| c < d));
        }
    }
}
