use super::combination::{add_checked, mul_checked};
use crate::error::{Error, Result};

/// Column-major sparse integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: Vec<Vec<(usize, i64)>>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols: vec![Vec::new(); cols] }
    }

    /// Builds from `(row, col, value)` triples; repeated positions add up.
    pub fn from_triplets(rows: usize, cols: usize, triplets: impl IntoIterator<Item = (usize, usize, i64)>) -> Result<Self> {
        let mut dense: Vec<std::collections::BTreeMap<usize, i64>> = vec![Default::default(); cols];
        for (r, c, v) in triplets {
            if r >= rows || c >= cols {
                return Err(Error::ShapeMismatch(format!("entry ({r}, {c}) outside {rows}x{cols}")));
            }
            let e = dense[c].entry(r).or_insert(0);
            *e = add_checked(*e, v);
        }
        let cols = dense.into_iter().map(|m| m.into_iter().filter(|&(_, v)| v != 0).collect()).collect();
        Ok(SparseMatrix { rows, cols })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, j: usize) -> &[(usize, i64)] {
        &self.cols[j]
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.cols[c].iter().find(|&&(i, _)| i == r).map_or(0, |&(_, v)| v)
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    /// `self · other`.
    pub fn mul(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        if self.cols() != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows,
                self.cols(),
                other.rows,
                other.cols()
            )));
        }
        let mut triplets = Vec::new();
        for (j, col) in other.cols.iter().enumerate() {
            for &(k, b) in col {
                for &(i, a) in &self.cols[k] {
                    triplets.push((i, j, mul_checked(a, b)));
                }
            }
        }
        SparseMatrix::from_triplets(self.rows, other.cols(), triplets)
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![0; self.cols()]; self.rows];
        for (j, col) in self.cols.iter().enumerate() {
            for &(i, v) in col {
                out[i][j] = v;
            }
        }
        out
    }

    /// Matrix-vector product on a dense vector.
    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        let mut out = vec![0; self.rows];
        for (j, col) in self.cols.iter().enumerate() {
            if v[j] == 0 {
                continue;
            }
            for &(i, a) in col {
                out[i] = add_checked(out[i], mul_checked(a, v[j]));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_and_cancellation() {
        let a = SparseMatrix::from_triplets(2, 2, [(0, 0, 1), (0, 1, 1), (1, 1, 2), (1, 1, -2)]).unwrap();
        assert_eq!(a.nnz(), 2);
        let b = SparseMatrix::from_triplets(2, 1, [(0, 0, 1), (1, 0, -1)]).unwrap();
        assert!(a.mul(&b).unwrap().is_zero());
        assert!(a.mul(&a.mul(&b).unwrap()).unwrap().is_zero());
        assert!(b.mul(&b).is_err());
    }

    #[test]
    fn dense_round_trip() {
        let a = SparseMatrix::from_triplets(2, 3, [(1, 2, 5), (0, 0, -1)]).unwrap();
        assert_eq!(a.to_dense(), vec![vec![-1, 0, 0], vec![0, 0, 5]]);
        assert_eq!(a.apply(&[1, 1, 1]), vec![-1, 5]);
        assert_eq!(a.get(1, 2), 5);
    }
}
