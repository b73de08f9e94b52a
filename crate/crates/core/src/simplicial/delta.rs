use super::OrderedComplex;
use crate::error::{Error, Result};

/// A finite delta-complex: cells in each dimension with face maps
/// `d_0, …, d_n` from dimension `n` to `n - 1`.
///
/// `faces[n][c][i]` is the index of `d_i(c)` among the `(n-1)`-cells.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct DeltaComplex {
    counts: Vec<usize>,
    faces: Vec<Vec<Vec<usize>>>,
}

impl DeltaComplex {
    /// Builds and validates a delta-complex from the vertex count and the
    /// face tables of dimensions `1..`.
    pub fn new(vertex_count: usize, faces: Vec<Vec<Vec<usize>>>) -> Result<Self> {
        let mut counts = vec![vertex_count];
        let mut all = vec![vec![Vec::new(); vertex_count]];
        for (k, layer) in faces.into_iter().enumerate() {
            let dim = k + 1;
            for (c, f) in layer.iter().enumerate() {
                if f.len() != dim + 1 || f.iter().any(|&x| x >= counts[dim - 1]) {
                    return Err(Error::FaceOutOfRange { dim, cell: c });
                }
            }
            counts.push(layer.len());
            all.push(layer);
        }
        while counts.len() > 1 && *counts.last().unwrap() == 0 {
            counts.pop();
            all.pop();
        }
        if counts == [0] {
            counts.clear();
            all.clear();
        }
        let out = DeltaComplex { counts, faces: all };
        out.check_face_identities()?;
        Ok(out)
    }

    pub fn from_ordered(x: &OrderedComplex) -> Self {
        let mut faces = Vec::new();
        for k in 0..=x.dim().unwrap_or(0) {
            let layer: Vec<Vec<usize>> = x
                .simplices(k)
                .iter()
                .map(|s| {
                    if k == 0 {
                        Vec::new()
                    } else {
                        (0..=k).map(|i| x.index_of(&s.face(i)).expect("face closed")).collect()
                    }
                })
                .collect();
            faces.push(layer);
        }
        if x.is_empty() {
            faces.clear();
        }
        DeltaComplex { counts: faces.iter().map(Vec::len).collect(), faces }
    }

    /// Number of cells per dimension.
    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn count(&self, dim: usize) -> usize {
        self.counts.get(dim).copied().unwrap_or(0)
    }

    pub fn dim(&self) -> Option<usize> {
        self.counts.len().checked_sub(1)
    }

    /// `d_i` of the given cell.
    pub fn face(&self, dim: usize, cell: usize, i: usize) -> usize {
        self.faces[dim][cell][i]
    }

    pub fn faces_of(&self, dim: usize, cell: usize) -> &[usize] {
        &self.faces[dim][cell]
    }

    /// Checks `d_i d_j = d_{j-1} d_i` for `i < j` on every cell.
    pub fn check_face_identities(&self) -> Result<()> {
        for dim in 2..self.counts.len() {
            for cell in 0..self.counts[dim] {
                for j in 1..=dim {
                    for i in 0..j {
                        let lhs = self.face(dim - 1, self.face(dim, cell, j), i);
                        let rhs = self.face(dim - 1, self.face(dim, cell, i), j - 1);
                        if lhs != rhs {
                            return Err(Error::FaceIdentity { dim, cell, i, j });
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordered_complex_satisfies_identities() {
        let x = OrderedComplex::standard_simplex(3);
        let d = DeltaComplex::from_ordered(&x);
        assert_eq!(d.counts(), &[4, 6, 4, 1]);
        d.check_face_identities().unwrap();
    }

    #[test]
    fn rejects_broken_identity() {
        // a 2-cell whose faces do not close up: d0 = d1 = edge 0 with
        // endpoints (v1, v0) and d2 = edge 1 with endpoints (v1, v1)
        let err = DeltaComplex::new(2, vec![vec![vec![1, 0], vec![1, 1]], vec![vec![0, 0, 1]]]);
        assert!(matches!(err, Err(Error::FaceIdentity { .. })));
    }

    #[test]
    fn one_vertex_circle() {
        let d = DeltaComplex::new(1, vec![vec![vec![0, 0]]]).unwrap();
        assert_eq!(d.counts(), &[1, 1]);
    }

    #[test]
    fn out_of_range_faces() {
        assert!(matches!(
            DeltaComplex::new(1, vec![vec![vec![0, 1]]]),
            Err(Error::FaceOutOfRange { dim: 1, cell: 0 })
        ));
    }
}
