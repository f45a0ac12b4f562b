//! GL_n(F_q): full enumeration at desk scale, standard parabolic subgroups
//! indexed by compositions, coset transversals, and element factorization
//! into a small fixed generating set.
//!
//! Enumeration is a breadth-first closure of the generating set, so each
//! element carries a parent pointer from which a defining word can be read
//! back off. Parabolic cosets are recognized through the canonical column
//! echelon form of the flag the coset moves.

use std::collections::HashMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{FEl, PrimePowerField};
use crate::matrix::Matrix;
use crate::perm::Perm;

/// An ordered tuple of positive integers summing to n, indexing a standard
/// parabolic subgroup (block sizes along the diagonal).
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Composition(Vec<u32>);

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Composition> {
        if parts.is_empty() || parts.iter().any(|&p| p == 0) {
            return Err(Error::Invalid("composition parts must be positive".into()));
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.iter().sum::<u32>() as usize
    }

    /// Cut points 0 < d_1 < ... < d_{k-1} < n.
    pub fn proper_prefixes(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut acc = 0usize;
        for &p in &self.0[..self.0.len() - 1] {
            acc += p as usize;
            out.push(acc);
        }
        out
    }

    pub fn underlying_partition(&self) -> Vec<u32> {
        let mut v = self.0.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }

    pub fn label(&self) -> String {
        self.0
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join("+")
    }
}

/// All 2^(n-1) compositions of n: grouped by number of parts, then
/// lexicographically decreasing. For n = 3 this is (3), (2,1), (1,2), (1,1,1).
pub fn compositions(n: usize) -> Vec<Composition> {
    assert!(n >= 1);
    let mut out = Vec::new();
    for mask in 0..(1u32 << (n - 1)) {
        let mut parts = Vec::new();
        let mut size = 1u32;
        for i in 0..(n - 1) {
            if mask & (1 << i) != 0 {
                parts.push(size);
                size = 1;
            } else {
                size += 1;
            }
        }
        parts.push(size);
        out.push(Composition(parts));
    }
    out.sort_by(|a, b| {
        a.0.len()
            .cmp(&b.0.len())
            .then_with(|| b.0.cmp(&a.0))
    });
    out
}

/// Compositions of n, the index set of the standard parabolic subgroups.
pub fn standard_parabolics(n: usize) -> Vec<Composition> {
    compositions(n)
}

/// The standard parabolic subgroup for a composition: block upper
/// triangular matrices, with its Levi of block diagonal matrices.
#[derive(Clone, Debug)]
pub struct StandardParabolic {
    composition: Composition,
    n: usize,
    /// block index of each position
    block_of: Vec<usize>,
    /// start offset of each block
    block_start: Vec<usize>,
}

impl StandardParabolic {
    pub fn new(composition: Composition) -> StandardParabolic {
        let n = composition.n();
        let mut block_of = Vec::with_capacity(n);
        let mut block_start = Vec::new();
        let mut pos = 0usize;
        for (b, &p) in composition.parts().iter().enumerate() {
            block_start.push(pos);
            for _ in 0..p {
                block_of.push(b);
                pos += 1;
            }
        }
        StandardParabolic {
            composition,
            n,
            block_of,
            block_start,
        }
    }

    pub fn composition(&self) -> &Composition {
        &self.composition
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_whole_group(&self) -> bool {
        self.composition.parts().len() == 1
    }

    /// Membership: zero below the block diagonal.
    pub fn contains(&self, m: &Matrix) -> bool {
        for r in 0..self.n {
            for c in 0..self.n {
                if self.block_of[r] > self.block_of[c] && !m.at(r, c).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// The block diagonal part, i.e. the Levi projection of a member.
    pub fn levi_part(&self, m: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(m.field().clone(), self.n, self.n);
        for r in 0..self.n {
            for c in 0..self.n {
                if self.block_of[r] == self.block_of[c] {
                    out.set(r, c, m.at(r, c));
                }
            }
        }
        out
    }

    /// Positions i on the superdiagonal with i, i+1 in the same block: the
    /// simple root groups of the Levi.
    pub fn simple_root_positions(&self) -> Vec<usize> {
        (0..self.n.saturating_sub(1))
            .filter(|&i| self.block_of[i] == self.block_of[i + 1])
            .collect()
    }

    /// Is it blockwise upper unitriangular (a member of U_P inside the Levi)?
    pub fn in_levi_unipotent(&self, m: &Matrix) -> bool {
        for r in 0..self.n {
            for c in 0..self.n {
                let v = m.at(r, c);
                if r == c {
                    if v != FEl::ONE {
                        return false;
                    }
                } else if self.block_of[r] == self.block_of[c] {
                    if r > c && !v.is_zero() {
                        return false;
                    }
                } else if !v.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    pub fn order(&self, q: u64) -> u64 {
        self.levi_order(q) * q.pow(self.unipotent_radical_dim())
    }

    pub fn levi_order(&self, q: u64) -> u64 {
        self.composition
            .parts()
            .iter()
            .map(|&k| gl_order(k as usize, q))
            .product()
    }

    /// Dimension of the unipotent radical: sum over block pairs k < l of
    /// alpha_k * alpha_l.
    pub fn unipotent_radical_dim(&self) -> u32 {
        let parts = self.composition.parts();
        let mut dim = 0;
        for k in 0..parts.len() {
            for l in (k + 1)..parts.len() {
                dim += parts[k] * parts[l];
            }
        }
        dim
    }

    /// Order of U_P, the blockwise upper unitriangular subgroup of the Levi.
    pub fn levi_unipotent_order(&self, q: u64) -> u64 {
        let e: u32 = self
            .composition
            .parts()
            .iter()
            .map(|&k| k * (k - 1) / 2)
            .sum();
        q.pow(e)
    }

    /// A generating set: torus generators, all superdiagonal transvections,
    /// and the lower transvections internal to blocks.
    pub fn generating_set(&self, field: &Arc<PrimePowerField>) -> Vec<Matrix> {
        let mut gens = Vec::new();
        let gamma = field.generator();
        if gamma != FEl::ONE {
            for i in 0..self.n {
                let mut d = Matrix::identity(field.clone(), self.n);
                d.set(i, i, gamma);
                gens.push(d);
            }
        }
        for i in 0..self.n.saturating_sub(1) {
            let mut t = Matrix::identity(field.clone(), self.n);
            t.set(i, i + 1, FEl::ONE);
            gens.push(t);
            if self.block_of[i] == self.block_of[i + 1] {
                let mut l = Matrix::identity(field.clone(), self.n);
                l.set(i + 1, i, FEl::ONE);
                gens.push(l);
            }
        }
        gens
    }

    /// Generators of U_P: simple root transvections with coefficients
    /// running over a basis of F_q (commutators fill in the rest).
    pub fn levi_unipotent_generators(&self, field: &Arc<PrimePowerField>) -> Vec<Matrix> {
        let mut gens = Vec::new();
        let mut coeffs = vec![FEl::ONE];
        let gamma = field.generator();
        let mut cur = gamma;
        for _ in 1..field.degree() {
            coeffs.push(cur);
            cur = field.mul(cur, gamma);
        }
        for i in self.simple_root_positions() {
            for &c in &coeffs {
                let mut t = Matrix::identity(field.clone(), self.n);
                t.set(i, i + 1, c);
                gens.push(t);
            }
        }
        // non-simple positive positions too, so small blocks spin fully
        for r in 0..self.n {
            for c in (r + 1)..self.n {
                if self.block_of[r] == self.block_of[c] && c > r + 1 {
                    let mut t = Matrix::identity(field.clone(), self.n);
                    t.set(r, c, FEl::ONE);
                    gens.push(t);
                }
            }
        }
        gens
    }

    pub fn block_of(&self) -> &[usize] {
        &self.block_of
    }

    pub fn block_start(&self) -> &[usize] {
        &self.block_start
    }
}

pub fn gl_order(n: usize, q: u64) -> u64 {
    let qn = q.pow(n as u32);
    (0..n).map(|i| qn - q.pow(i as u32)).product()
}

/// The group GL_n(F_q), fully enumerated.
pub struct GlnGroup {
    n: usize,
    field: Arc<PrimePowerField>,
    generators: Vec<Matrix>,
    elements: Vec<Matrix>,
    index: HashMap<u128, usize>,
    /// (generator index, parent element index); None for the identity.
    parent: Vec<Option<(usize, usize)>>,
    inverses: Vec<usize>,
}

impl GlnGroup {
    pub fn order_closed_form(n: usize, q: u64) -> u64 {
        gl_order(n, q)
    }

    /// Breadth-first enumeration from the standard generating set
    /// (primitive-root torus generator, n-cycle, one transvection).
    pub fn enumerate(n: usize, field: Arc<PrimePowerField>, bound: u64) -> Result<Arc<GlnGroup>> {
        assert!(n >= 1);
        let expected = Self::order_closed_form(n, field.order());
        if expected > bound {
            return Err(Error::Scale {
                what: format!("|GL_{}(F_{})|", n, field.order()),
                size: expected,
                bound,
            });
        }
        let mut generators = Vec::new();
        let gamma = field.generator();
        if gamma != FEl::ONE {
            let mut d = Matrix::identity(field.clone(), n);
            d.set(0, 0, gamma);
            generators.push(d);
        }
        if n >= 2 {
            generators.push(Perm::cycle(n).to_matrix(&field));
            let mut t = Matrix::identity(field.clone(), n);
            t.set(0, 1, FEl::ONE);
            generators.push(t);
        }
        if generators.is_empty() {
            // GL_1(F_2) is trivial
            generators.push(Matrix::identity(field.clone(), n));
        }

        let id = Matrix::identity(field.clone(), n);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::new();
        index.insert(id.pack_key(), 0usize);
        let mut parent: Vec<Option<(usize, usize)>> = vec![None];
        let mut head = 0usize;
        while head < elements.len() {
            let cur = elements[head].clone();
            for (gi, g) in generators.iter().enumerate() {
                let next = g.mul(&cur);
                let key = next.pack_key();
                if !index.contains_key(&key) {
                    index.insert(key, elements.len());
                    elements.push(next);
                    parent.push(Some((gi, head)));
                }
            }
            head += 1;
        }
        if elements.len() as u64 != expected {
            return Err(Error::Invalid(format!(
                "enumeration produced {} elements, closed form gives {}",
                elements.len(),
                expected
            )));
        }
        let inverses: Vec<usize> = elements
            .iter()
            .map(|m| {
                let inv = m.inverse().expect("group elements are invertible");
                index[&inv.pack_key()]
            })
            .collect();
        Ok(Arc::new(GlnGroup {
            n,
            field,
            generators,
            elements,
            index,
            parent,
            inverses,
        }))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &Arc<PrimePowerField> {
        &self.field
    }

    pub fn q(&self) -> u64 {
        self.field.order()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Matrix] {
        &self.generators
    }

    pub fn elements(&self) -> &[Matrix] {
        &self.elements
    }

    pub fn elem(&self, i: usize) -> &Matrix {
        &self.elements[i]
    }

    pub fn index_of(&self, m: &Matrix) -> Option<usize> {
        self.index.get(&m.pack_key()).copied()
    }

    pub fn inverse_index(&self, i: usize) -> usize {
        self.inverses[i]
    }

    pub fn mul_indices(&self, a: usize, b: usize) -> usize {
        let prod = self.elements[a].mul(&self.elements[b]);
        self.index[&prod.pack_key()]
    }

    /// A word in the generators evaluating to the element, read off the
    /// breadth-first parent chain (left-to-right product).
    pub fn factor_into_generators(&self, m: &Matrix) -> Option<Vec<usize>> {
        let mut i = self.index_of(m)?;
        let mut word = Vec::new();
        while let Some((gi, pi)) = self.parent[i] {
            word.push(gi);
            i = pi;
        }
        Some(word)
    }

    pub fn evaluate_word(&self, word: &[usize]) -> Matrix {
        let mut acc = Matrix::identity(self.field.clone(), self.n);
        for &gi in word {
            acc = acc.mul(&self.generators[gi]);
        }
        acc
    }

    pub fn random_element<R: rand::Rng>(&self, rng: &mut R) -> &Matrix {
        &self.elements[rng.gen_range(0..self.elements.len())]
    }

    /// Signature identifying the left coset gP: the reduced column echelon
    /// bases of the partial flags g<e_1..e_d> for proper prefixes d.
    pub fn parabolic_coset_signature(&self, p: &StandardParabolic, g: &Matrix) -> Vec<u8> {
        let mut sig = Vec::new();
        for d in p.composition().proper_prefixes() {
            // rows of the transpose = columns of g
            let sub = Matrix::from_fn(self.field.clone(), d, self.n, |r, c| g.at(c, r));
            let mut red = sub;
            red.row_reduce();
            for e in red.data() {
                sig.extend_from_slice(&e.0.to_le_bytes()[..2]);
            }
            sig.push(0xfe);
        }
        sig
    }

    /// Canonical representative of mU for U the blockwise upper
    /// unitriangular subgroup of the Levi; m must be block diagonal.
    pub fn canonical_mod_levi_unipotent(&self, p: &StandardParabolic, m: &Matrix) -> Matrix {
        let f = &self.field;
        let mut a = m.clone();
        let parts = p.composition().parts();
        let starts = p.block_start();
        for (b, &size) in parts.iter().enumerate() {
            let s = starts[b];
            let k = size as usize;
            let mut pivots: Vec<usize> = Vec::with_capacity(k);
            for j in 0..k {
                for (i, &pi) in pivots.iter().enumerate() {
                    let denom = a.at(s + pi, s + i);
                    let num = a.at(s + pi, s + j);
                    if num.is_zero() {
                        continue;
                    }
                    let c = f.div(num, denom);
                    for r in 0..k {
                        let sub = f.mul(c, a.at(s + r, s + i));
                        let cur = a.at(s + r, s + j);
                        a.set(s + r, s + j, f.sub(cur, sub));
                    }
                }
                let piv = (0..k)
                    .rev()
                    .find(|&r| !a.at(s + r, s + j).is_zero())
                    .expect("block of an invertible block-diagonal matrix is invertible");
                pivots.push(piv);
            }
        }
        a
    }
}

/// Ordered transversal of the left cosets G/P.
pub struct CosetTable {
    pub parabolic: StandardParabolic,
    /// element indices of the representatives, first one the identity coset
    pub reps: Vec<usize>,
    pub rep_mats: Vec<Matrix>,
    pub rep_invs: Vec<Matrix>,
    sig_map: HashMap<Vec<u8>, usize>,
}

impl CosetTable {
    pub fn build(group: &GlnGroup, parabolic: StandardParabolic) -> CosetTable {
        let mut sig_map = HashMap::new();
        let mut reps = Vec::new();
        let mut rep_mats = Vec::new();
        for (i, g) in group.elements().iter().enumerate() {
            let sig = group.parabolic_coset_signature(&parabolic, g);
            if !sig_map.contains_key(&sig) {
                sig_map.insert(sig, reps.len());
                reps.push(i);
                rep_mats.push(g.clone());
            }
        }
        let expected = group.order() as u64 / parabolic.order(group.q());
        assert_eq!(
            reps.len() as u64,
            expected,
            "coset count disagrees with order formula"
        );
        let rep_invs = rep_mats.iter().map(|m| m.inverse().unwrap()).collect();
        CosetTable {
            parabolic,
            reps,
            rep_mats,
            rep_invs,
            sig_map,
        }
    }

    pub fn index(&self) -> usize {
        self.reps.len()
    }

    pub fn coset_of(&self, group: &GlnGroup, g: &Matrix) -> usize {
        let sig = group.parabolic_coset_signature(&self.parabolic, g);
        self.sig_map[&sig]
    }
}

/// Transversal of M_P / U_P inside the Levi, via the canonical form under
/// right multiplication by U_P.
pub struct LeviCosets {
    pub parabolic: StandardParabolic,
    pub reps: Vec<Matrix>,
    pub rep_invs: Vec<Matrix>,
    map: HashMap<u128, usize>,
}

impl LeviCosets {
    pub fn build(group: &GlnGroup, parabolic: StandardParabolic) -> LeviCosets {
        let mut map = HashMap::new();
        let mut reps = Vec::new();
        for g in group.elements() {
            if parabolic.levi_part(g) != *g {
                continue;
            }
            let canon = group.canonical_mod_levi_unipotent(&parabolic, g);
            let key = canon.pack_key();
            if !map.contains_key(&key) {
                map.insert(key, reps.len());
                reps.push(canon);
            }
        }
        let expected = parabolic.levi_order(group.q()) / parabolic.levi_unipotent_order(group.q());
        assert_eq!(reps.len() as u64, expected, "Levi coset count mismatch");
        let rep_invs = reps.iter().map(|m| m.inverse().unwrap()).collect();
        LeviCosets {
            parabolic,
            reps,
            rep_invs,
            map,
        }
    }

    pub fn count(&self) -> usize {
        self.reps.len()
    }

    pub fn coset_of(&self, group: &GlnGroup, m: &Matrix) -> usize {
        let canon = group.canonical_mod_levi_unipotent(&self.parabolic, m);
        self.map[&canon.pack_key()]
    }
}

/// Orbit partition of G under x -> l x and x -> x r for the given generator
/// sets: the (L, R) double cosets. Returns one label per element.
pub fn double_coset_labels(
    group: &GlnGroup,
    left_gens: &[Matrix],
    right_gens: &[Matrix],
) -> (Vec<usize>, usize) {
    let mut label = vec![usize::MAX; group.order()];
    let mut next = 0usize;
    for start in 0..group.order() {
        if label[start] != usize::MAX {
            continue;
        }
        let orbit_id = next;
        next += 1;
        label[start] = orbit_id;
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            let x = group.elem(i);
            for l in left_gens {
                let moved = l.mul(x);
                let j = group.index_of(&moved).expect("closed under multiplication");
                if label[j] == usize::MAX {
                    label[j] = orbit_id;
                    stack.push(j);
                }
            }
            for r in right_gens {
                let moved = x.mul(r);
                let j = group.index_of(&moved).expect("closed under multiplication");
                if label[j] == usize::MAX {
                    label[j] = orbit_id;
                    stack.push(j);
                }
            }
        }
    }
    (label, next)
}

pub fn double_coset_count(group: &GlnGroup, p: &StandardParabolic, q: &StandardParabolic) -> usize {
    let left = p.generating_set(group.field());
    let right = q.generating_set(group.field());
    double_coset_labels(group, &left, &right).1
}

/// A block permutation conjugating P_alpha onto P_beta when alpha and beta
/// have the same underlying partition.
pub fn block_conjugator(
    field: &Arc<PrimePowerField>,
    alpha: &Composition,
    beta: &Composition,
) -> Option<Matrix> {
    if alpha.underlying_partition() != beta.underlying_partition() {
        return None;
    }
    let n = alpha.n();
    // match each beta block to an unused alpha block of the same size
    let a_parts = alpha.parts();
    let b_parts = beta.parts();
    let mut used = vec![false; a_parts.len()];
    let mut perm = vec![0u8; n];
    let a_starts: Vec<usize> = {
        let mut v = vec![0usize];
        for &p in &a_parts[..a_parts.len() - 1] {
            v.push(v.last().unwrap() + p as usize);
        }
        v
    };
    let mut b_pos = 0usize;
    for &bp in b_parts {
        let ai = (0..a_parts.len()).find(|&i| !used[i] && a_parts[i] == bp)?;
        used[ai] = true;
        for off in 0..bp as usize {
            // position in alpha-land maps to position in beta-land
            perm[a_starts[ai] + off] = (b_pos + off) as u8;
        }
        b_pos += bp as usize;
    }
    Some(Perm(perm).to_matrix(field))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn group(n: usize, p: u64, d: u32) -> Arc<GlnGroup> {
        GlnGroup::enumerate(n, make_field(p, d).unwrap(), 100_000).unwrap()
    }

    #[test]
    fn composition_order_matches_convention() {
        let c2: Vec<Vec<u32>> = compositions(2).iter().map(|c| c.parts().to_vec()).collect();
        assert_eq!(c2, vec![vec![2], vec![1, 1]]);
        let c3: Vec<Vec<u32>> = compositions(3).iter().map(|c| c.parts().to_vec()).collect();
        assert_eq!(c3, vec![vec![3], vec![2, 1], vec![1, 2], vec![1, 1, 1]]);
        assert_eq!(compositions(4).len(), 8);
    }

    #[test]
    fn group_orders_by_enumeration() {
        assert_eq!(group(2, 2, 1).order(), 6);
        assert_eq!(group(2, 3, 1).order(), 48);
        assert_eq!(group(3, 2, 1).order(), 168);
        assert_eq!(group(2, 5, 1).order(), 480);
        assert_eq!(group(1, 7, 1).order(), 6);
    }

    #[test]
    fn scale_bound_is_enforced() {
        let err = GlnGroup::enumerate(3, make_field(3, 1).unwrap(), 10_000).unwrap_err();
        match err {
            Error::Scale { size, .. } => assert_eq!(size, 11232),
            other => panic!("expected scale error, got {other}"),
        }
    }

    #[test]
    fn parabolic_orders_and_membership() {
        let g = group(3, 2, 1);
        for comp in compositions(3) {
            let p = StandardParabolic::new(comp);
            let by_membership = g.elements().iter().filter(|m| p.contains(m)).count();
            assert_eq!(by_membership as u64, p.order(2));
            assert_eq!(
                p.order(2),
                p.levi_order(2) * 2u64.pow(p.unipotent_radical_dim())
            );
        }
    }

    #[test]
    fn transversal_indices() {
        let g2 = group(2, 3, 1);
        let b = StandardParabolic::new(Composition::new(vec![1, 1]).unwrap());
        let t = CosetTable::build(&g2, b);
        assert_eq!(t.index(), 4); // q + 1 by enumeration

        let g3 = group(3, 2, 1);
        let b3 = StandardParabolic::new(Composition::new(vec![1, 1, 1]).unwrap());
        assert_eq!(CosetTable::build(&g3, b3).index(), 21);

        let whole = StandardParabolic::new(Composition::new(vec![3]).unwrap());
        assert_eq!(CosetTable::build(&g3, whole).index(), 1);
    }

    #[test]
    fn transversal_is_a_bijection() {
        // (rep, p) -> rep * p hits every element exactly once
        let g = group(2, 3, 1);
        let b = StandardParabolic::new(Composition::new(vec![1, 1]).unwrap());
        let t = CosetTable::build(&g, b.clone());
        let members: Vec<&Matrix> = g.elements().iter().filter(|m| b.contains(m)).collect();
        let mut seen = std::collections::HashSet::new();
        for rep in &t.rep_mats {
            for p in &members {
                let prod = rep.mul(p);
                assert!(seen.insert(prod.pack_key()));
            }
        }
        assert_eq!(seen.len(), g.order());
    }

    #[test]
    fn coset_lookup_consistent() {
        let g = group(3, 2, 1);
        let p = StandardParabolic::new(Composition::new(vec![2, 1]).unwrap());
        let t = CosetTable::build(&g, p.clone());
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..50 {
            let x = g.random_element(&mut rng).clone();
            let c = t.coset_of(&g, &x);
            // rep^{-1} x must lie in P
            let back = t.rep_invs[c].mul(&x);
            assert!(p.contains(&back));
        }
    }

    #[test]
    fn factorization_roundtrip() {
        let g = group(3, 2, 1);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let id = Matrix::identity(g.field().clone(), 3);
        assert_eq!(g.factor_into_generators(&id).unwrap(), Vec::<usize>::new());
        for _ in 0..30 {
            let x = g.random_element(&mut rng).clone();
            let word = g.factor_into_generators(&x).unwrap();
            assert_eq!(g.evaluate_word(&word), x);
        }
    }

    #[test]
    fn parabolic_generators_generate() {
        let g = group(2, 5, 1);
        for comp in compositions(2) {
            let p = StandardParabolic::new(comp);
            let gens = p.generating_set(g.field());
            // BFS closure inside the parabolic
            let mut seen = std::collections::HashSet::new();
            let id = Matrix::identity(g.field().clone(), 2);
            seen.insert(id.pack_key());
            let mut stack = vec![id];
            while let Some(x) = stack.pop() {
                for gen in &gens {
                    let y = gen.mul(&x);
                    if seen.insert(y.pack_key()) {
                        stack.push(y);
                    }
                }
            }
            assert_eq!(seen.len() as u64, p.order(5));
        }
    }

    #[test]
    fn levi_coset_canonical_form() {
        let g = group(2, 3, 1);
        let whole = StandardParabolic::new(Composition::new(vec![2]).unwrap());
        let lc = LeviCosets::build(&g, whole.clone());
        assert_eq!(lc.count() as u64, 48 / 3); // |GL_2(3)| / |U|
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        // canonical(m u) == canonical(m)
        for _ in 0..40 {
            let m = g.random_element(&mut rng).clone();
            let mut u = Matrix::identity(g.field().clone(), 2);
            u.set(0, 1, g.field().random_elem(&mut rng));
            let a = g.canonical_mod_levi_unipotent(&whole, &m);
            let b = g.canonical_mod_levi_unipotent(&whole, &m.mul(&u));
            assert_eq!(a, b);
            assert_eq!(lc.coset_of(&g, &m), lc.coset_of(&g, &m.mul(&u)));
        }
    }

    #[test]
    fn double_cosets_match_weyl_counts() {
        let g = group(3, 2, 1);
        let comps = compositions(3);
        for a in &comps {
            for b in &comps {
                let pa = StandardParabolic::new(a.clone());
                let pb = StandardParabolic::new(b.clone());
                let gside = double_coset_count(&g, &pa, &pb);
                let wside = crate::perm::weyl_double_coset_count(3, a.parts(), b.parts());
                assert_eq!(gside, wside, "{:?} vs {:?}", a, b);
            }
        }
    }

    #[test]
    fn conjugate_compositions() {
        let g = group(3, 2, 1);
        let a = Composition::new(vec![1, 2]).unwrap();
        let b = Composition::new(vec![2, 1]).unwrap();
        let c = block_conjugator(g.field(), &a, &b).unwrap();
        let pa = StandardParabolic::new(a);
        let pb = StandardParabolic::new(b);
        let cinv = c.inverse().unwrap();
        for m in g.elements() {
            if pa.contains(m) {
                let moved = c.mul(m).mul(&cinv);
                assert!(pb.contains(&moved));
            }
        }
    }
}
