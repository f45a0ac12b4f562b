//! Dense matrices over a small finite field, with exact Gaussian
//! elimination, kernels, and characteristic polynomials.
//!
//! Everything here assumes dimensions of at most a few thousand; no sparse
//! pathway exists because none is needed at that scale.

use std::sync::Arc;

use crate::field::{FEl, PrimePowerField};
use crate::poly::{poly_normalize, Poly};

#[derive(Clone)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<FEl>,
    field: Arc<PrimePowerField>,
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{} over F_{}", self.rows, self.cols, self.field.order())?;
        for r in 0..self.rows {
            let row: Vec<u32> = (0..self.cols).map(|c| self.at(r, c).0).collect();
            writeln!(f, "  {:?}", row)?;
        }
        Ok(())
    }
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.field.same_field(&other.field)
            && self.data == other.data
    }
}
impl Eq for Matrix {}

impl Matrix {
    pub fn zeros(field: Arc<PrimePowerField>, rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            data: vec![FEl::ZERO; rows * cols],
            field,
        }
    }

    pub fn identity(field: Arc<PrimePowerField>, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, FEl::ONE);
        }
        m
    }

    pub fn from_rows(field: Arc<PrimePowerField>, rows: Vec<Vec<FEl>>) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |v| v.len());
        let mut data = Vec::with_capacity(r * c);
        for row in &rows {
            assert_eq!(row.len(), c);
            data.extend_from_slice(row);
        }
        Matrix {
            rows: r,
            cols: c,
            data,
            field,
        }
    }

    pub fn from_fn(
        field: Arc<PrimePowerField>,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> FEl,
    ) -> Matrix {
        let mut m = Matrix::zeros(field, rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.set(r, c, f(r, c));
            }
        }
        m
    }

    #[inline]
    pub fn at(&self, r: usize, c: usize) -> FEl {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: FEl) {
        self.data[r * self.cols + c] = v;
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[FEl] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> &Arc<PrimePowerField> {
        &self.field
    }

    pub fn data(&self) -> &[FEl] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        for r in 0..self.rows {
            for c in 0..self.cols {
                let want = if r == c { FEl::ONE } else { FEl::ZERO };
                if self.at(r, c) != want {
                    return false;
                }
            }
        }
        true
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.field.clone(), self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.at(r, c));
            }
        }
        out
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in matrix product");
        let f = &self.field;
        let mut out = Matrix::zeros(self.field.clone(), self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                let orow = r * out.cols;
                let krow = k * other.cols;
                for c in 0..other.cols {
                    let b = other.data[krow + c];
                    if b.is_zero() {
                        continue;
                    }
                    out.data[orow + c] = f.add(out.data[orow + c], f.mul(a, b));
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = &self.field;
        let mut out = self.clone();
        for (o, &b) in out.data.iter_mut().zip(other.data.iter()) {
            *o = f.add(*o, b);
        }
        out
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = &self.field;
        let mut out = self.clone();
        for (o, &b) in out.data.iter_mut().zip(other.data.iter()) {
            *o = f.sub(*o, b);
        }
        out
    }

    pub fn scale(&self, c: FEl) -> Matrix {
        let f = &self.field;
        let mut out = self.clone();
        for o in out.data.iter_mut() {
            *o = f.mul(*o, c);
        }
        out
    }

    pub fn add_scaled_in_place(&mut self, other: &Matrix, c: FEl) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if c.is_zero() {
            return;
        }
        let f = self.field.clone();
        for (o, &b) in self.data.iter_mut().zip(other.data.iter()) {
            if !b.is_zero() {
                *o = f.add(*o, f.mul(c, b));
            }
        }
    }

    /// w = M v for a column vector v.
    pub fn apply(&self, v: &[FEl]) -> Vec<FEl> {
        assert_eq!(v.len(), self.cols);
        let f = &self.field;
        let mut out = vec![FEl::ZERO; self.rows];
        for r in 0..self.rows {
            let row = self.row(r);
            let mut acc = FEl::ZERO;
            for (x, &y) in row.iter().zip(v.iter()) {
                if !x.is_zero() && !y.is_zero() {
                    acc = f.add(acc, f.mul(*x, y));
                }
            }
            out[r] = acc;
        }
        out
    }

    /// In-place reduction to reduced row echelon form; returns pivot columns.
    pub fn row_reduce(&mut self) -> Vec<usize> {
        let f = self.field.clone();
        let mut pivots = Vec::new();
        let mut lead_row = 0usize;
        for col in 0..self.cols {
            if lead_row == self.rows {
                break;
            }
            let pivot = (lead_row..self.rows).find(|&r| !self.at(r, col).is_zero());
            let pivot = match pivot {
                Some(p) => p,
                None => continue,
            };
            if pivot != lead_row {
                for c in 0..self.cols {
                    self.data.swap(pivot * self.cols + c, lead_row * self.cols + c);
                }
            }
            let inv = f.inv(self.at(lead_row, col));
            if inv != FEl::ONE {
                for c in col..self.cols {
                    let v = self.at(lead_row, c);
                    self.set(lead_row, c, f.mul(v, inv));
                }
            }
            for r in 0..self.rows {
                if r == lead_row {
                    continue;
                }
                let factor = self.at(r, col);
                if factor.is_zero() {
                    continue;
                }
                let (base, len) = (lead_row * self.cols, self.cols);
                for c in col..len {
                    let sub = f.mul(factor, self.data[base + c]);
                    let cur = self.data[r * len + c];
                    self.data[r * len + c] = f.sub(cur, sub);
                }
            }
            pivots.push(col);
            lead_row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.row_reduce().len()
    }

    /// Basis of {x : self * x = 0}, one vector per free column of the RREF.
    pub fn kernel_basis(&self) -> Vec<Vec<FEl>> {
        let f = self.field.clone();
        let mut m = self.clone();
        let pivots = m.row_reduce();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let mut out = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![FEl::ZERO; self.cols];
            v[free] = FEl::ONE;
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(m.at(row, free));
            }
            out.push(v);
        }
        out
    }

    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let f = self.field.clone();
        let mut aug = Matrix::zeros(f, n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.at(r, c));
            }
            aug.set(r, n + r, FEl::ONE);
        }
        let pivots = aug.row_reduce();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        let mut inv = Matrix::zeros(self.field.clone(), n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, aug.at(r, n + c));
            }
        }
        Some(inv)
    }

    pub fn determinant_nonzero(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// Characteristic polynomial (monic, little-endian) via Hessenberg
    /// reduction by similarity transforms.
    pub fn charpoly(&self) -> Poly {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let f = self.field.clone();
        if n == 0 {
            return vec![FEl::ONE];
        }
        let mut h = self.clone();
        for j in 0..n.saturating_sub(1) {
            let pivot = ((j + 1)..n).find(|&r| !h.at(r, j).is_zero());
            let pivot = match pivot {
                Some(p) => p,
                None => continue,
            };
            if pivot != j + 1 {
                for c in 0..n {
                    let (a, b) = (h.at(pivot, c), h.at(j + 1, c));
                    h.set(pivot, c, b);
                    h.set(j + 1, c, a);
                }
                for r in 0..n {
                    let (a, b) = (h.at(r, pivot), h.at(r, j + 1));
                    h.set(r, pivot, b);
                    h.set(r, j + 1, a);
                }
            }
            let d_inv = f.inv(h.at(j + 1, j));
            for i in (j + 2)..n {
                let m = f.mul(h.at(i, j), d_inv);
                if m.is_zero() {
                    continue;
                }
                // row_i -= m * row_{j+1}; col_{j+1} += m * col_i
                for c in 0..n {
                    let sub = f.mul(m, h.at(j + 1, c));
                    let cur = h.at(i, c);
                    h.set(i, c, f.sub(cur, sub));
                }
                for r in 0..n {
                    let addv = f.mul(m, h.at(r, i));
                    let cur = h.at(r, j + 1);
                    h.set(r, j + 1, f.add(cur, addv));
                }
            }
        }
        // p_k = (x - h[k-1][k-1]) p_{k-1} - sum_i h[i][k-1] (prod subdiag) p_i
        let mut ps: Vec<Poly> = Vec::with_capacity(n + 1);
        ps.push(vec![FEl::ONE]);
        for k in 1..=n {
            let mut pk = {
                // (x - h_kk) * p_{k-1}
                let prev = &ps[k - 1];
                let mut shifted = vec![FEl::ZERO];
                shifted.extend_from_slice(prev);
                let scaled: Poly = prev.iter().map(|&c| f.mul(f.neg(h.at(k - 1, k - 1)), c)).collect();
                let mut out = vec![FEl::ZERO; shifted.len()];
                for (i, o) in out.iter_mut().enumerate() {
                    let a = shifted.get(i).copied().unwrap_or(FEl::ZERO);
                    let b = scaled.get(i).copied().unwrap_or(FEl::ZERO);
                    *o = f.add(a, b);
                }
                out
            };
            let mut prod = FEl::ONE;
            for i in (0..k.saturating_sub(1)).rev() {
                prod = f.mul(prod, h.at(i + 1, i));
                if prod.is_zero() {
                    break;
                }
                let coef = f.mul(h.at(i, k - 1), prod);
                if coef.is_zero() {
                    continue;
                }
                for (j, &c) in ps[i].iter().enumerate() {
                    pk[j] = f.sub(pk[j], f.mul(coef, c));
                }
            }
            ps.push(pk);
        }
        let mut out = ps.pop().unwrap();
        poly_normalize(&mut out);
        out
    }

    /// Evaluates a polynomial at this square matrix (Horner).
    pub fn eval_poly(&self, p: &Poly) -> Matrix {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut acc = Matrix::zeros(self.field.clone(), n, n);
        for &c in p.iter().rev() {
            acc = acc.mul(self);
            if !c.is_zero() {
                for i in 0..n {
                    let cur = acc.at(i, i);
                    acc.set(i, i, self.field.add(cur, c));
                }
            }
        }
        acc
    }

    /// Packs entries base-order into a u128 key; panics if it does not fit.
    pub fn pack_key(&self) -> u128 {
        let order = self.field.order() as u128;
        let mut key: u128 = 0;
        for &e in &self.data {
            key = key
                .checked_mul(order)
                .and_then(|k| k.checked_add(e.0 as u128))
                .expect("matrix too large to pack into u128 key");
        }
        key
    }

    pub fn to_int_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows)
            .map(|r| self.row(r).iter().map(|e| e.0).collect())
            .collect()
    }
}

/// An incrementally built row space kept in reduced echelon form, with rows
/// ordered by pivot column. Vectors in the span have coordinates that can be
/// read off at the pivots.
#[derive(Clone)]
pub struct Echelon {
    field: Arc<PrimePowerField>,
    dim: usize,
    /// (pivot column, reduced row), sorted by pivot column.
    rows: Vec<(usize, Vec<FEl>)>,
}

impl Echelon {
    pub fn new(field: Arc<PrimePowerField>, dim: usize) -> Echelon {
        Echelon {
            field,
            dim,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.dim
    }

    pub fn rows(&self) -> impl Iterator<Item = &[FEl]> {
        self.rows.iter().map(|(_, r)| r.as_slice())
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|(p, _)| *p).collect()
    }

    pub fn reduce_in_place(&self, v: &mut [FEl]) {
        let f = &self.field;
        for (p, row) in &self.rows {
            let c = v[*p];
            if c.is_zero() {
                continue;
            }
            for (x, &y) in v.iter_mut().zip(row.iter()) {
                if !y.is_zero() {
                    *x = f.sub(*x, f.mul(c, y));
                }
            }
        }
    }

    /// Adds a vector to the span. Returns true if the rank grew.
    pub fn insert(&mut self, mut v: Vec<FEl>) -> bool {
        assert_eq!(v.len(), self.dim);
        self.reduce_in_place(&mut v);
        let lead = match v.iter().position(|e| !e.is_zero()) {
            Some(l) => l,
            None => return false,
        };
        let f = self.field.clone();
        let inv = f.inv(v[lead]);
        if inv != FEl::ONE {
            for x in v.iter_mut() {
                *x = f.mul(*x, inv);
            }
        }
        for (_, row) in self.rows.iter_mut() {
            let c = row[lead];
            if c.is_zero() {
                continue;
            }
            for (x, &y) in row.iter_mut().zip(v.iter()) {
                if !y.is_zero() {
                    *x = f.sub(*x, f.mul(c, y));
                }
            }
        }
        let pos = self.rows.partition_point(|(p, _)| *p < lead);
        self.rows.insert(pos, (lead, v));
        true
    }

    pub fn contains(&self, v: &[FEl]) -> bool {
        let mut w = v.to_vec();
        self.reduce_in_place(&mut w);
        w.iter().all(|e| e.is_zero())
    }

    /// Coordinates of v in the stored basis, or None if v is outside.
    pub fn coords_of(&self, v: &[FEl]) -> Option<Vec<FEl>> {
        let f = &self.field;
        let mut w = v.to_vec();
        let mut coords = Vec::with_capacity(self.rows.len());
        for (p, row) in &self.rows {
            let c = w[*p];
            coords.push(c);
            if c.is_zero() {
                continue;
            }
            for (x, &y) in w.iter_mut().zip(row.iter()) {
                if !y.is_zero() {
                    *x = f.sub(*x, f.mul(c, y));
                }
            }
        }
        if w.iter().all(|e| e.is_zero()) {
            Some(coords)
        } else {
            None
        }
    }

    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_rows(
            self.field.clone(),
            self.rows.iter().map(|(_, r)| r.clone()).collect(),
        )
    }

    /// Pivot columns of a basis of a complement (the free columns).
    pub fn complement_columns(&self) -> Vec<usize> {
        let pivot_set: std::collections::HashSet<usize> =
            self.rows.iter().map(|(p, _)| *p).collect();
        (0..self.dim).filter(|c| !pivot_set.contains(c)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field;
    use crate::poly::{poly_mul, poly_sub, Poly};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_matrix(f: &Arc<PrimePowerField>, n: usize, rng: &mut ChaCha8Rng) -> Matrix {
        Matrix::from_fn(f.clone(), n, n, |_, _| f.random_elem(rng))
    }

    /// Test oracle: determinant of xI - A by Laplace expansion with
    /// polynomial entries.
    fn charpoly_laplace(a: &Matrix) -> Poly {
        let f = a.field().clone();
        let n = a.rows();
        let entries: Vec<Vec<Poly>> = (0..n)
            .map(|r| {
                (0..n )
                    .map(|c| {
                        let mut p: Poly = vec![f.neg(a.at(r, c))];
                        if r == c {
                            p.push(FEl::ONE);
                        }
                        poly_normalize(&mut p);
                        p
                    })
                    .collect()
            })
            .collect();
        fn det(f: &Arc<PrimePowerField>, m: &[Vec<Poly>]) -> Poly {
            let n = m.len();
            if n == 0 {
                return vec![FEl::ONE];
            }
            let mut acc: Poly = Vec::new();
            for r in 0..n {
                let minor: Vec<Vec<Poly>> = (0..n)
                    .filter(|&i| i != r)
                    .map(|i| m[i][1..].to_vec())
                    .collect();
                let term = poly_mul(f, &m[r][0], &det(f, &minor));
                acc = if r % 2 == 0 {
                    crate::poly::poly_add(f, &acc, &term)
                } else {
                    poly_sub(f, &acc, &term)
                };
            }
            acc
        }
        det(&f, &entries)
    }

    #[test]
    fn charpoly_matches_laplace_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for &(p, m) in &[(2u64, 1u32), (3, 1), (2, 2), (5, 1)] {
            let f = make_field(p, m).unwrap();
            for n in 1..=5usize {
                for _ in 0..10 {
                    let a = random_matrix(&f, n, &mut rng);
                    assert_eq!(a.charpoly(), charpoly_laplace(&a), "matrix {:?}", a);
                }
            }
        }
    }

    #[test]
    fn cayley_hamilton() {
        let mut rng = ChaCha8Rng::seed_from_u64(43);
        for &(p, m) in &[(2u64, 2u32), (3, 1), (7, 1)] {
            let f = make_field(p, m).unwrap();
            for n in [1usize, 4, 9, 16] {
                let a = random_matrix(&f, n, &mut rng);
                let cp = a.charpoly();
                assert_eq!(cp.len(), n + 1);
                assert!(a.eval_poly(&cp).is_zero());
            }
        }
    }

    #[test]
    fn rank_nullity() {
        let mut rng = ChaCha8Rng::seed_from_u64(47);
        let f = make_field(3, 1).unwrap();
        for _ in 0..50 {
            let rows = rng.gen_range(1..8);
            let cols = rng.gen_range(1..8);
            let a = Matrix::from_fn(f.clone(), rows, cols, |_, _| f.random_elem(&mut rng));
            let rank = a.rank();
            let kernel = a.kernel_basis();
            assert_eq!(rank + kernel.len(), cols);
            for v in &kernel {
                assert!(a.apply(v).iter().all(|e| e.is_zero()));
            }
        }
    }

    #[test]
    fn inverse_roundtrip() {
        let mut rng = ChaCha8Rng::seed_from_u64(53);
        let f = make_field(5, 1).unwrap();
        let mut found = 0;
        while found < 20 {
            let a = random_matrix(&f, 4, &mut rng);
            if let Some(inv) = a.inverse() {
                assert!(a.mul(&inv).is_identity());
                assert!(inv.mul(&a).is_identity());
                found += 1;
            }
        }
    }

    #[test]
    fn echelon_span_and_coords() {
        let f = make_field(7, 1).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(59);
        let dim = 6;
        let mut ech = Echelon::new(f.clone(), dim);
        let mut raw: Vec<Vec<FEl>> = Vec::new();
        for _ in 0..4 {
            let v: Vec<FEl> = (0..dim).map(|_| f.random_elem(&mut rng)).collect();
            ech.insert(v.clone());
            raw.push(v);
        }
        // random combination of raw vectors is in the span with readable coords
        for _ in 0..20 {
            let mut v = vec![FEl::ZERO; dim];
            for r in &raw {
                let c = f.random_elem(&mut rng);
                for (x, &y) in v.iter_mut().zip(r.iter()) {
                    *x = f.add(*x, f.mul(c, y));
                }
            }
            assert!(ech.contains(&v));
            let coords = ech.coords_of(&v).unwrap();
            let mut back = vec![FEl::ZERO; dim];
            for (c, row) in coords.iter().zip(ech.rows()) {
                for (x, &y) in back.iter_mut().zip(row.iter()) {
                    *x = f.add(*x, f.mul(*c, y));
                }
            }
            assert_eq!(back, v);
        }
    }
}
