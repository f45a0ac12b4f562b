//! Permutations of {0, .., n-1} and the symmetric group as Weyl group.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::field::{FEl, PrimePowerField};
use crate::matrix::Matrix;

/// A permutation in one-line notation: `i -> perm[i]`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Perm(pub Vec<u8>);

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm((0..n as u8).collect())
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i as u8 == x)
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    /// Composition applying `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut out = vec![0u8; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            out[x as usize] = i as u8;
        }
        Perm(out)
    }

    /// Adjacent transposition (i, i+1).
    pub fn transposition(n: usize, i: usize) -> Perm {
        let mut v: Vec<u8> = (0..n as u8).collect();
        v.swap(i, i + 1);
        Perm(v)
    }

    /// The n-cycle 0 -> 1 -> ... -> n-1 -> 0.
    pub fn cycle(n: usize) -> Perm {
        Perm((0..n).map(|i| ((i + 1) % n) as u8).collect())
    }

    /// Coxeter length = number of inversions.
    pub fn coxeter_length(&self) -> usize {
        let v = &self.0;
        let mut count = 0;
        for i in 0..v.len() {
            for j in (i + 1)..v.len() {
                if v[i] > v[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Permutation matrix P with P e_j = e_{perm(j)}.
    pub fn to_matrix(&self, field: &Arc<PrimePowerField>) -> Matrix {
        let n = self.n();
        let mut m = Matrix::zeros(field.clone(), n, n);
        for j in 0..n {
            m.set(self.apply(j), j, FEl::ONE);
        }
        m
    }

    /// Acts on coordinate vectors: (perm . t)[perm(i)] = t[i].
    pub fn permute_coords(&self, t: &[i64]) -> Vec<i64> {
        let mut out = vec![0i64; t.len()];
        for (i, &x) in t.iter().enumerate() {
            out[self.apply(i)] = x;
        }
        out
    }
}

/// All permutations of n letters in lexicographic one-line order.
pub fn all_perms(n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut cur: Vec<u8> = (0..n as u8).collect();
    loop {
        out.push(Perm(cur.clone()));
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

/// Generators of the parabolic subgroup W_alpha of S_n: the adjacent
/// transpositions internal to the blocks of the composition.
pub fn weyl_parabolic_gens(n: usize, alpha: &[u32]) -> Vec<Perm> {
    let mut gens = Vec::new();
    let mut start = 0usize;
    for &part in alpha {
        for i in start..start + part as usize - 1 {
            gens.push(Perm::transposition(n, i));
        }
        start += part as usize;
    }
    gens
}

/// Number of (W_alpha, W_beta) double cosets in S_n, by orbit counting.
pub fn weyl_double_coset_count(n: usize, alpha: &[u32], beta: &[u32]) -> usize {
    let perms = all_perms(n);
    let index: std::collections::HashMap<Vec<u8>, usize> = perms
        .iter()
        .enumerate()
        .map(|(i, p)| (p.0.clone(), i))
        .collect();
    let left = weyl_parabolic_gens(n, alpha);
    let right = weyl_parabolic_gens(n, beta);
    let mut seen = vec![false; perms.len()];
    let mut orbits = 0;
    for start in 0..perms.len() {
        if seen[start] {
            continue;
        }
        orbits += 1;
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(i) = stack.pop() {
            let w = &perms[i];
            for g in left.iter() {
                let moved = g.compose(w);
                let j = index[&moved.0];
                if !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
            for h in right.iter() {
                let moved = w.compose(h);
                let j = index[&moved.0];
                if !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
    }
    orbits
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_and_inverse() {
        let c = Perm::cycle(4);
        let t = Perm::transposition(4, 1);
        let ct = c.compose(&t);
        assert_eq!(ct.compose(&ct.inverse()), Perm::identity(4));
        // apply t first, then c
        assert_eq!(ct.apply(1), c.apply(t.apply(1)));
    }

    #[test]
    fn all_perms_counts() {
        assert_eq!(all_perms(1).len(), 1);
        assert_eq!(all_perms(3).len(), 6);
        assert_eq!(all_perms(4).len(), 24);
    }

    #[test]
    fn lengths() {
        assert_eq!(Perm::identity(4).coxeter_length(), 0);
        assert_eq!(Perm::transposition(4, 2).coxeter_length(), 1);
        let w0 = Perm(vec![3, 2, 1, 0]);
        assert_eq!(w0.coxeter_length(), 6);
    }

    #[test]
    fn weyl_double_cosets_n3() {
        // S_3 with parabolic pairs: the classical counts
        assert_eq!(weyl_double_coset_count(3, &[3], &[3]), 1);
        assert_eq!(weyl_double_coset_count(3, &[2, 1], &[2, 1]), 2);
        assert_eq!(weyl_double_coset_count(3, &[2, 1], &[1, 2]), 2);
        assert_eq!(weyl_double_coset_count(3, &[2, 1], &[1, 1, 1]), 3);
        assert_eq!(weyl_double_coset_count(3, &[1, 1, 1], &[1, 1, 1]), 6);
    }
}
