//! Permutations of `{1..n}` stored as image tables.

use std::fmt;
use std::str::FromStr;

use super::GroupError;

/// A bijection of `{1..n}`. `image[k]` holds `p(k+1)` with 1-based points.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    /// Validates that `image` is a bijection of `{1..n}`.
    pub fn new(image: Vec<usize>) -> Result<Self, GroupError> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &v in &image {
            if v < 1 || v > n || seen[v - 1] {
                return Err(GroupError::NotABijection { image });
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { image })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (1..=n).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    /// `p(k)` for a 1-based point `k`.
    pub fn apply(&self, k: usize) -> usize {
        self.image[k - 1]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    /// `(p ∘ q)(k) = p(q(k))`: apply `q` first, then `p`.
    pub fn compose(&self, q: &Permutation) -> Result<Permutation, GroupError> {
        if self.degree() != q.degree() {
            return Err(GroupError::SizeMismatch {
                left: self.degree(),
                right: q.degree(),
            });
        }
        let image = (1..=q.degree()).map(|k| self.apply(q.apply(k))).collect();
        Ok(Permutation { image })
    }

    /// The inverse image table: `result(p(k)) = k`.
    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0; self.degree()];
        for k in 1..=self.degree() {
            image[self.apply(k) - 1] = k;
        }
        Permutation { image }
    }

    /// Sign of the permutation: +1 for even, -1 for odd.
    pub fn parity(&self) -> i8 {
        let mut visited = vec![false; self.degree()];
        let mut sign = 1i8;
        for start in 1..=self.degree() {
            if visited[start - 1] {
                continue;
            }
            let mut len = 0usize;
            let mut k = start;
            while !visited[k - 1] {
                visited[k - 1] = true;
                k = self.apply(k);
                len += 1;
            }
            if len.is_multiple_of(2) {
                sign = -sign;
            }
        }
        sign
    }

    /// All `n!` permutations of degree `n`, in lexicographic image order.
    pub fn enumerate(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(n);
        let mut used = vec![false; n];
        fn rec(
            n: usize,
            current: &mut Vec<usize>,
            used: &mut Vec<bool>,
            out: &mut Vec<Permutation>,
        ) {
            if current.len() == n {
                out.push(Permutation {
                    image: current.clone(),
                });
                return;
            }
            for v in 1..=n {
                if !used[v - 1] {
                    used[v - 1] = true;
                    current.push(v);
                    rec(n, current, used, out);
                    current.pop();
                    used[v - 1] = false;
                }
            }
        }
        rec(n, &mut current, &mut used, &mut out);
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.image.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

/// Parses the image-list form, e.g. `"2 3 1"`.
impl FromStr for Permutation {
    type Err = GroupError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let image: Result<Vec<usize>, _> = s.split_whitespace().map(str::parse).collect();
        let image = image.map_err(|_| GroupError::ParsePermutation(s.to_string()))?;
        if image.is_empty() {
            return Err(GroupError::ParsePermutation(s.to_string()));
        }
        Permutation::new(image)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn compose_applies_right_operand_first() {
        assert_eq!(p("2 3 1").compose(&p("2 1 3")).unwrap(), p("3 2 1"));
    }

    #[test]
    fn identity_is_neutral() {
        let q = p("3 1 4 2");
        assert_eq!(q.compose(&Permutation::identity(4)).unwrap(), q);
        assert_eq!(Permutation::identity(4).compose(&q).unwrap(), q);
    }

    #[test]
    fn inverse_composes_to_identity() {
        let q = p("2 3 1");
        assert_eq!(q.inverse(), p("3 1 2"));
        assert_eq!(q.compose(&q.inverse()).unwrap(), Permutation::identity(3));
        assert_eq!(Permutation::identity(5).inverse(), Permutation::identity(5));
        let t = p("2 1 3");
        assert_eq!(t.inverse(), t);
    }

    #[test]
    fn size_mismatch_is_rejected() {
        assert!(matches!(
            p("2 1").compose(&p("1 2 3")),
            Err(GroupError::SizeMismatch { .. })
        ));
    }

    #[test]
    fn bad_image_tables_are_rejected() {
        assert!(Permutation::new(vec![1, 1, 3]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![1, 4, 2]).is_err());
    }

    #[test]
    fn enumeration_has_factorial_size() {
        assert_eq!(Permutation::enumerate(3).len(), 6);
        assert_eq!(Permutation::enumerate(4).len(), 24);
    }

    #[test]
    fn parity_of_transposition_is_odd() {
        assert_eq!(p("2 1 3").parity(), -1);
        assert_eq!(p("2 3 1").parity(), 1);
        assert_eq!(Permutation::identity(6).parity(), 1);
    }
}
