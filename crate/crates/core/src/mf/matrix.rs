use std::fmt;
use std::sync::Arc;

use crate::error::MfError;
use crate::poly::{PolyRing, Polynomial};

/// Dense matrix over a polynomial ring. Arithmetic panics on shape
/// mismatch; public entry points check shapes before calling it.
#[derive(Clone)]
pub struct PolyMatrix {
    ring: Arc<PolyRing>,
    rows: usize,
    cols: usize,
    data: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn zero(ring: &Arc<PolyRing>, rows: usize, cols: usize) -> Self {
        PolyMatrix {
            ring: ring.clone(),
            rows,
            cols,
            data: vec![Polynomial::zero(ring); rows * cols],
        }
    }

    pub fn identity(ring: &Arc<PolyRing>, n: usize) -> Self {
        Self::scalar(ring, n, &Polynomial::one(ring))
    }

    /// `p` times the identity.
    pub fn scalar(ring: &Arc<PolyRing>, n: usize, p: &Polynomial) -> Self {
        let mut m = Self::zero(ring, n, n);
        for i in 0..n {
            m.set(i, i, p.clone());
        }
        m
    }

    /// Matrix unit `E_ij`.
    pub fn unit(ring: &Arc<PolyRing>, rows: usize, cols: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zero(ring, rows, cols);
        m.set(i, j, Polynomial::one(ring));
        m
    }

    /// Permutation matrix sending basis vector `p` to `perm[p]`.
    pub fn permutation(ring: &Arc<PolyRing>, perm: &[usize]) -> Self {
        let n = perm.len();
        let mut m = Self::zero(ring, n, n);
        for (p, &q) in perm.iter().enumerate() {
            m.set(q, p, Polynomial::one(ring));
        }
        m
    }

    pub fn from_rows(ring: &Arc<PolyRing>, rows: Vec<Vec<Polynomial>>) -> Result<Self, MfError> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(nrows * ncols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != ncols {
                return Err(MfError::Shape(format!(
                    "row {i} has {} entries, expected {ncols}",
                    row.len()
                )));
            }
            for p in row {
                data.push(p.in_ring(ring)?);
            }
        }
        Ok(PolyMatrix {
            ring: ring.clone(),
            rows: nrows,
            cols: ncols,
            data,
        })
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial) {
        self.data[i * self.cols + j] = p;
    }

    pub fn to_rows(&self) -> Vec<Vec<Polynomial>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).clone()).collect())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|p| p.is_zero())
    }

    pub fn mul(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        let mut out = PolyMatrix::zero(&self.ring, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = &out.data[idx] + &(a * b);
                }
            }
        }
        out
    }

    fn zip(
        &self,
        other: &PolyMatrix,
        f: impl Fn(&Polynomial, &Polynomial) -> Polynomial,
    ) -> PolyMatrix {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "matrix shape"
        );
        PolyMatrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    pub fn add(&self, other: &PolyMatrix) -> PolyMatrix {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &PolyMatrix) -> PolyMatrix {
        self.zip(other, |a, b| a - b)
    }

    pub fn neg(&self) -> PolyMatrix {
        self.scale(&-Polynomial::one(&self.ring))
    }

    pub fn scale(&self, p: &Polynomial) -> PolyMatrix {
        PolyMatrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * p).collect(),
        }
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut out = PolyMatrix::zero(&self.ring, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    /// `[[tl, tr], [bl, br]]`.
    pub fn block(tl: &PolyMatrix, tr: &PolyMatrix, bl: &PolyMatrix, br: &PolyMatrix) -> PolyMatrix {
        assert_eq!(tl.rows, tr.rows, "block rows");
        assert_eq!(bl.rows, br.rows, "block rows");
        assert_eq!(tl.cols, bl.cols, "block cols");
        assert_eq!(tr.cols, br.cols, "block cols");
        let mut out = PolyMatrix::zero(&tl.ring, tl.rows + bl.rows, tl.cols + tr.cols);
        out.paste(0, 0, tl);
        out.paste(0, tl.cols, tr);
        out.paste(tl.rows, 0, bl);
        out.paste(tl.rows, tl.cols, br);
        out
    }

    pub fn block_diag(ring: &Arc<PolyRing>, blocks: &[&PolyMatrix]) -> PolyMatrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = PolyMatrix::zero(ring, rows, cols);
        let (mut r, mut c) = (0, 0);
        for b in blocks {
            out.paste(r, c, b);
            r += b.rows;
            c += b.cols;
        }
        out
    }

    fn paste(&mut self, r0: usize, c0: usize, m: &PolyMatrix) {
        for i in 0..m.rows {
            for j in 0..m.cols {
                self.set(r0 + i, c0 + j, m.get(i, j).clone());
            }
        }
    }

    pub fn sub_block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> PolyMatrix {
        let mut out = PolyMatrix::zero(&self.ring, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                out.set(i, j, self.get(r0 + i, c0 + j).clone());
            }
        }
        out
    }
}

impl PartialEq for PolyMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.ring.same_ambient(&other.ring)
            && self.data == other.data
    }
}

impl Eq for PolyMatrix {}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}
