//! Dense matrices and subspaces over a prime field `F_p`.
//!
//! Vectors are column vectors acted on from the left; a subspace is stored by
//! its reduced row-echelon basis, so two subspaces are equal exactly when
//! their bases are equal.

use std::fmt;

/// Largest prime accepted; products of two residues fit in `u64` comfortably.
pub const MAX_PRIME: u32 = 65521;

pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[inline]
fn mul_mod(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

fn inv_mod(a: u32, p: u32) -> u32 {
    // Fermat: a^(p-2)
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc = 1u32;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    p: u32,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix over F_{} ({}x{})", self.p, self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(p: u32, rows: usize, cols: usize) -> Self {
        Matrix {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(p: u32, n: usize) -> Self {
        let mut m = Matrix::zeros(p, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from row vectors of length `cols` (entries reduced mod p).
    pub fn from_rows(p: u32, cols: usize, rows: &[Vec<u32>]) -> Self {
        let mut m = Matrix::zeros(p, rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "row length");
            for (j, &v) in r.iter().enumerate() {
                m.set(i, j, v % p);
            }
        }
        m
    }

    /// Matrix whose columns are the given vectors of length `rows`.
    pub fn from_columns(p: u32, rows: usize, cols: &[Vec<u32>]) -> Self {
        Matrix::from_rows(p, rows, cols).transpose()
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v % self.p;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.p, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c);
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        assert_eq!(self.p, other.p, "matrix product prime");
        let p = self.p as u64;
        let mut out = Matrix::zeros(self.p, self.rows, other.cols);
        for i in 0..self.rows {
            let mut acc = vec![0u64; other.cols];
            for k in 0..self.cols {
                let a = self.get(i, k) as u64;
                if a == 0 {
                    continue;
                }
                let orow = other.row(k);
                for (slot, &b) in acc.iter_mut().zip(orow) {
                    *slot += a * b as u64;
                }
                if k % 64 == 63 {
                    for slot in acc.iter_mut() {
                        *slot %= p;
                    }
                }
            }
            for (j, v) in acc.into_iter().enumerate() {
                out.data[i * other.cols + j] = (v % p) as u32;
            }
        }
        out
    }

    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(self.cols, v.len(), "vector length");
        let p = self.p as u64;
        (0..self.rows)
            .map(|i| {
                let s: u64 = self.row(i).iter().zip(v).map(|(&a, &b)| a as u64 * b as u64).sum();
                (s % p) as u32
            })
            .collect()
    }

    pub fn pow(&self, e: usize) -> Matrix {
        assert_eq!(self.rows, self.cols);
        let mut acc = Matrix::identity(self.p, self.rows);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, &b) in out.data.iter_mut().zip(&other.data) {
            *a = (*a + b) % self.p;
        }
        out
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, &b) in out.data.iter_mut().zip(&other.data) {
            *a = (*a + self.p - b) % self.p;
        }
        out
    }

    pub fn scale(&self, s: u32) -> Matrix {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a = mul_mod(*a, s % self.p, self.p);
        }
        out
    }

    /// Stacks `self` on top of `other`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix {
            p: self.p,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Places `blocks` along the diagonal.
    pub fn block_diag(p: u32, blocks: &[&Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(p, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for r in 0..b.rows {
                for c in 0..b.cols {
                    out.set(r0 + r, c0 + c, b.get(r, c));
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// In-place reduced row-echelon form; returns the pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let p = self.p;
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| self.get(i, c) != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..cols {
                    self.data.swap(pr * cols + j, r * cols + j);
                }
            }
            let inv = inv_mod(self.get(r, c), p);
            if inv != 1 {
                for j in c..cols {
                    let v = self.get(r, j);
                    self.data[r * cols + j] = mul_mod(v, inv, p);
                }
            }
            let pivot_row: Vec<u32> = self.row(r)[c..].to_vec();
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let f = self.get(i, c);
                if f == 0 {
                    continue;
                }
                let neg = p - f;
                let base = i * cols;
                for (off, &pv) in pivot_row.iter().enumerate() {
                    if pv != 0 {
                        let slot = &mut self.data[base + c + off];
                        *slot = ((*slot as u64 + neg as u64 * pv as u64) % p as u64) as u32;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref_in_place().len()
    }

    /// Basis (as rows) of `{x : self * x = 0}`.
    pub fn nullspace(&self) -> Matrix {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Matrix::zeros(self.p, free.len(), self.cols);
        for (k, &f) in free.iter().enumerate() {
            basis.set(k, f, 1);
            for (i, &pc) in pivots.iter().enumerate() {
                let v = m.get(i, f);
                if v != 0 {
                    basis.set(k, pc, self.p - v);
                }
            }
        }
        basis
    }

    /// Dimension of the nullspace.
    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }
}

/// A linear subspace of `F_p^n`, stored by its reduced row-echelon basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    basis: Matrix,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subspace(dim {} in F_{}^{}) {:?}",
            self.dim(),
            self.basis.p,
            self.ambient_dim(),
            self.basis.rows()
        )
    }
}

impl Subspace {
    pub fn zero(p: u32, n: usize) -> Self {
        Subspace {
            basis: Matrix::zeros(p, 0, n),
        }
    }

    pub fn full(p: u32, n: usize) -> Self {
        Subspace {
            basis: Matrix::identity(p, n),
        }
    }

    /// Row space of `m`.
    pub fn row_space(m: &Matrix) -> Self {
        let mut b = m.clone();
        let rank = b.rref_in_place().len();
        b.rows = rank;
        b.data.truncate(rank * b.cols);
        Subspace { basis: b }
    }

    pub fn of_vectors(p: u32, n: usize, vectors: &[Vec<u32>]) -> Self {
        Subspace::row_space(&Matrix::from_rows(p, n, vectors))
    }

    /// Column space of `m`.
    pub fn image(m: &Matrix) -> Self {
        Subspace::row_space(&m.transpose())
    }

    pub fn kernel(m: &Matrix) -> Self {
        Subspace::row_space(&m.nullspace())
    }

    pub fn prime(&self) -> u32 {
        self.basis.p
    }

    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols
    }

    /// The canonical basis, one vector per row.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn vectors(&self) -> Vec<Vec<u32>> {
        self.basis.rows()
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        let extended = self
            .basis
            .vstack(&Matrix::from_rows(self.prime(), self.ambient_dim(), &[v.to_vec()]));
        extended.rank() == self.dim()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        other.sum(self).dim() == other.dim()
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Subspace::row_space(&self.basis.vstack(&other.basis))
    }

    /// Orthogonal complement with respect to the standard dot product.
    pub fn perp(&self) -> Subspace {
        Subspace::kernel(&self.basis)
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        self.perp().sum(&other.perp()).perp()
    }

    /// Image under the linear map `m`.
    pub fn map(&self, m: &Matrix) -> Subspace {
        // rows b_i -> (m b_i)^T, i.e. basis * m^T
        Subspace::row_space(&self.basis.mul(&m.transpose()))
    }

    /// `{x : m x ∈ self}`.
    pub fn preimage(&self, m: &Matrix) -> Subspace {
        Subspace::kernel(&self.perp().basis.mul(m))
    }

    /// Reorders coordinates: coordinate `i` moves to position `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Subspace {
        let vectors: Vec<Vec<u32>> = self
            .vectors()
            .into_iter()
            .map(|v| {
                let mut w = vec![0; v.len()];
                for (i, x) in v.into_iter().enumerate() {
                    w[perm[i]] = x;
                }
                w
            })
            .collect();
        Subspace::of_vectors(self.prime(), self.ambient_dim(), &vectors)
    }
}
