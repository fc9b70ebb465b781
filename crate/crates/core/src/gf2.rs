//! Linear algebra over GF(2).
//!
//! Rows are packed into 64-bit words and all elimination is word-parallel
//! XOR. [`Gf2Matrix`] is the labelled, symmetric square matrix used for
//! adjacency matrices; [`BitMatrix`] is the unlabelled rectangular workhorse
//! behind it.

use std::fmt;

use num_traits::PrimInt;

use crate::error::{Error, Result};

const WORD: usize = 64;

fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD)
}

/// Rank over GF(2) of a family of vectors packed into single machine words.
///
/// Keeps an XOR basis indexed by lowest set bit, so each insertion is at most
/// `T::BITS` XORs.
pub fn rank_of_words<T: PrimInt>(rows: impl IntoIterator<Item = T>) -> usize {
    let bits = T::zero().count_zeros() as usize;
    let mut basis = vec![T::zero(); bits];
    let mut rank = 0;
    for mut v in rows {
        while !v.is_zero() {
            let p = v.trailing_zeros() as usize;
            if basis[p].is_zero() {
                basis[p] = v;
                rank += 1;
                break;
            }
            v = v ^ basis[p];
        }
    }
    rank
}

/// Dense rectangular matrix over GF(2) with bit-packed rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = words_for(cols);
        Self {
            rows,
            cols,
            stride,
            data: vec![0; rows * stride],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        debug_assert!(r < self.rows && c < self.cols);
        (self.data[r * self.stride + c / WORD] >> (c % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, bit: bool) {
        debug_assert!(r < self.rows && c < self.cols);
        let w = &mut self.data[r * self.stride + c / WORD];
        let mask = 1u64 << (c % WORD);
        if bit {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.stride..(r + 1) * self.stride]
    }

    fn xor_row_into(&mut self, src: usize, dst: usize) {
        let s = self.stride;
        for k in 0..s {
            let v = self.data[src * s + k];
            self.data[dst * s + k] ^= v;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let s = self.stride;
        for k in 0..s {
            self.data.swap(a * s + k, b * s + k);
        }
    }

    /// Submatrix on the given row and column index lists (in that order).
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut m = Self::zeros(rows.len(), cols.len());
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                if self.get(r, c) {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.get(i, k) {
                    let s = out.stride;
                    for w in 0..s {
                        out.data[i * s + w] ^= other.data[k * s + w];
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a ^= b;
        }
        out
    }

    pub fn mul_vec(&self, x: &[bool]) -> Vec<bool> {
        assert_eq!(x.len(), self.cols);
        (0..self.rows)
            .map(|r| (0..self.cols).filter(|&c| x[c] && self.get(r, c)).count() % 2 == 1)
            .collect()
    }

    /// Rank by forward elimination on a copy.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        for c in 0..m.cols {
            let Some(p) = (rank..m.rows).find(|&r| m.get(r, c)) else {
                continue;
            };
            m.swap_rows(rank, p);
            for r in rank + 1..m.rows {
                if m.get(r, c) {
                    m.xor_row_into(rank, r);
                }
            }
            rank += 1;
        }
        rank
    }

    /// Gauss-Jordan inverse; `None` when singular or not square.
    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for c in 0..n {
            let p = (c..n).find(|&r| a.get(r, c))?;
            a.swap_rows(c, p);
            inv.swap_rows(c, p);
            for r in 0..n {
                if r != c && a.get(r, c) {
                    a.xor_row_into(c, r);
                    inv.xor_row_into(c, r);
                }
            }
        }
        Some(inv)
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let line: String = (0..self.cols)
                .map(|c| if self.get(r, c) { '1' } else { '0' })
                .collect();
            writeln!(f, "  {line}")?;
        }
        Ok(())
    }
}

/// Square symmetric 0/1 matrix over GF(2) indexed by an ordered label set.
///
/// The empty matrix is valid and counts as invertible, with rank and nullity
/// both zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Matrix {
    labels: Vec<String>,
    entries: BitMatrix,
}

impl Gf2Matrix {
    pub fn zeros(labels: Vec<String>) -> Self {
        let n = labels.len();
        Self {
            labels,
            entries: BitMatrix::zeros(n, n),
        }
    }

    pub fn identity(labels: Vec<String>) -> Self {
        let n = labels.len();
        Self {
            labels,
            entries: BitMatrix::identity(n),
        }
    }

    /// Builds a matrix from `f(i, j)`; fails if the result is not symmetric.
    pub fn from_fn(labels: Vec<String>, f: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let n = labels.len();
        let mut entries = BitMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                entries.set(i, j, f(i, j));
            }
        }
        Self::from_bits(labels, entries)
    }

    /// Builds a matrix from 0/1 rows.
    pub fn from_rows(labels: Vec<String>, rows: &[Vec<u8>]) -> Result<Self> {
        let n = labels.len();
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(Error::UnsupportedInput(format!(
                "expected a {n}x{n} matrix"
            )));
        }
        Self::from_fn(labels, |i, j| rows[i][j] & 1 == 1)
    }

    pub fn from_bits(labels: Vec<String>, entries: BitMatrix) -> Result<Self> {
        let n = labels.len();
        if entries.rows() != n || entries.cols() != n {
            return Err(Error::UnsupportedInput(format!(
                "expected a {n}x{n} matrix"
            )));
        }
        for i in 0..n {
            for j in i + 1..n {
                if entries.get(i, j) != entries.get(j, i) {
                    return Err(Error::NotSymmetric(i, j));
                }
            }
        }
        Ok(Self { labels, entries })
    }

    /// Matrix with labels `"0"`, `"1"`, ... from a row-major 0/1 array.
    pub fn from_numeric_rows(rows: &[Vec<u8>]) -> Result<Self> {
        let labels = (0..rows.len()).map(|i| i.to_string()).collect();
        Self::from_rows(labels, rows)
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn bits(&self) -> &BitMatrix {
        &self.entries
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.entries.get(i, j)
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::InvalidIndex(label.to_string()))
    }

    fn indices_of(&self, subset: &[&str]) -> Result<Vec<usize>> {
        let mut idx = subset
            .iter()
            .map(|l| self.index_of(l))
            .collect::<Result<Vec<_>>>()?;
        idx.sort_unstable();
        idx.dedup();
        Ok(idx)
    }

    /// Rank and nullity of the principal submatrix on the labelled subset.
    pub fn rank_nullity(&self, subset: &[&str]) -> Result<(usize, usize)> {
        let idx = self.indices_of(subset)?;
        let r = self.rank_on(&idx);
        Ok((r, idx.len() - r))
    }

    /// Rank of the principal submatrix on sorted, distinct indices.
    pub fn rank_on(&self, idx: &[usize]) -> usize {
        if idx.is_empty() {
            return 0;
        }
        if self.dim() <= WORD {
            let mask: u64 = idx.iter().fold(0, |m, &i| m | (1u64 << i));
            return rank_of_words(idx.iter().map(|&i| self.entries.row(i)[0] & mask));
        }
        self.entries.select(idx, idx).rank()
    }

    /// Rank of the principal submatrix selected by a bitmask (dimension <= 64).
    pub fn rank_mask(&self, mask: u64) -> usize {
        assert!(self.dim() <= WORD, "rank_mask needs dimension <= 64");
        rank_of_words(
            (0..self.dim())
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| self.entries.row(i)[0] & mask),
        )
    }

    pub fn is_invertible_on(&self, idx: &[usize]) -> bool {
        self.rank_on(idx) == idx.len()
    }

    /// Principal pivot transform `A*T` on the labelled subset.
    pub fn principal_pivot_transform(&self, subset: &[&str]) -> Result<Self> {
        let idx = self.indices_of(subset)?;
        self.pivot_on(&idx)
    }

    /// Principal pivot transform on sorted, distinct indices.
    ///
    /// With `P = A[T]`, `Q = A[T, rest]`, `R = A[rest, T]`, `S = A[rest]`
    /// the result is `[P^-1, P^-1 Q; R P^-1, S + R P^-1 Q]` (no signs over
    /// GF(2)), scattered back to the original positions.
    pub fn pivot_on(&self, idx: &[usize]) -> Result<Self> {
        if idx.is_empty() {
            return Ok(self.clone());
        }
        let n = self.dim();
        let rest: Vec<usize> = (0..n).filter(|i| idx.binary_search(i).is_err()).collect();
        let a = &self.entries;
        let p_inv = a.select(idx, idx).inverse().ok_or_else(|| {
            let names: Vec<&str> = idx.iter().map(|&i| self.labels[i].as_str()).collect();
            Error::PivotNotDefined(names.join(","))
        })?;
        let q = a.select(idx, &rest);
        let r = a.select(&rest, idx);
        let s = a.select(&rest, &rest);
        let pq = p_inv.mul(&q);
        let rp = r.mul(&p_inv);
        let s2 = s.add(&r.mul(&pq));

        let mut out = BitMatrix::zeros(n, n);
        let blocks: [(&[usize], &[usize], &BitMatrix); 4] = [
            (idx, idx, &p_inv),
            (idx, &rest, &pq),
            (&rest, idx, &rp),
            (&rest, &rest, &s2),
        ];
        for (rows, cols, m) in blocks {
            for (i, &ri) in rows.iter().enumerate() {
                for (j, &cj) in cols.iter().enumerate() {
                    if m.get(i, j) {
                        out.set(ri, cj, true);
                    }
                }
            }
        }
        Ok(Self {
            labels: self.labels.clone(),
            entries: out,
        })
    }

    /// Principal submatrix with index `i` removed (`A \ v`).
    pub fn delete(&self, i: usize) -> Self {
        let keep: Vec<usize> = (0..self.dim()).filter(|&k| k != i).collect();
        self.principal(&keep)
    }

    /// Principal submatrix on sorted indices, keeping their labels.
    pub fn principal(&self, idx: &[usize]) -> Self {
        Self {
            labels: idx.iter().map(|&k| self.labels[k].clone()).collect(),
            entries: self.entries.select(idx, idx),
        }
    }

    /// Exchanges the rows and columns at positions `i` and `j`; labels stay put.
    pub fn swap_indices(&self, i: usize, j: usize) -> Self {
        let mut perm: Vec<usize> = (0..self.dim()).collect();
        perm.swap(i, j);
        Self {
            labels: self.labels.clone(),
            entries: self.entries.select(&perm, &perm),
        }
    }

    pub fn mul_vec(&self, x: &[bool]) -> Vec<bool> {
        self.entries.mul_vec(x)
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Matrix[{}] ", self.labels.join(","))?;
        self.entries.fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[u8]]) -> Gf2Matrix {
        Gf2Matrix::from_numeric_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn rank_nullity_examples() {
        let z = m(&[&[0]]);
        assert_eq!(z.rank_nullity(&["0"]).unwrap(), (0, 1));

        let k2 = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(k2.rank_nullity(&["0", "1"]).unwrap(), (2, 0));

        let p3 = m(&[&[0, 1, 0], &[1, 0, 1], &[0, 1, 0]]);
        assert_eq!(p3.rank_nullity(&["0", "1", "2"]).unwrap(), (2, 1));
        assert_eq!(p3.rank_nullity(&[]).unwrap(), (0, 0));
    }

    #[test]
    fn unknown_label_is_rejected() {
        let k2 = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(
            k2.rank_nullity(&["0", "q"]),
            Err(Error::InvalidIndex("q".into()))
        );
    }

    #[test]
    fn asymmetric_input_is_rejected() {
        let r = Gf2Matrix::from_numeric_rows(&[vec![0, 1], vec![0, 0]]);
        assert_eq!(r.unwrap_err(), Error::NotSymmetric(0, 1));
    }

    #[test]
    fn pivot_examples() {
        let id = m(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(id.principal_pivot_transform(&["0", "1", "2"]).unwrap(), id);

        let k2 = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(k2.principal_pivot_transform(&["0", "1"]).unwrap(), k2);

        let p3 = m(&[&[0, 1, 0], &[1, 0, 1], &[0, 1, 0]]);
        assert_eq!(p3.principal_pivot_transform(&[]).unwrap(), p3);
    }

    #[test]
    fn singular_pivot_names_subset() {
        let p3 = m(&[&[0, 1, 0], &[1, 0, 1], &[0, 1, 0]]);
        assert_eq!(
            p3.principal_pivot_transform(&["0"]),
            Err(Error::PivotNotDefined("0".into()))
        );
    }

    #[test]
    fn wide_matrices_use_multiword_rows() {
        let n = 130;
        let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        // path graph: nullity is n mod 2
        let a = Gf2Matrix::from_fn(labels, |i, j| i.abs_diff(j) == 1).unwrap();
        let all: Vec<usize> = (0..n).collect();
        assert_eq!(a.rank_on(&all), 130);
        let odd: Vec<usize> = (0..129).collect();
        assert_eq!(a.rank_on(&odd), 128);
    }

    #[test]
    fn word_rank_matches_dense_rank() {
        let rows = [0b1011u64, 0b0110, 0b1101, 0b0000, 0b1011];
        let mut bm = BitMatrix::zeros(rows.len(), 4);
        for (r, w) in rows.iter().enumerate() {
            for c in 0..4 {
                bm.set(r, c, w >> c & 1 == 1);
            }
        }
        assert_eq!(rank_of_words(rows), bm.rank());
        assert_eq!(bm.rank(), 2);
    }
}
