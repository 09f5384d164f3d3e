//! Dense exact linear algebra over the rationals, plus the bipartite block
//! splitting used to cut large sparse systems into independent pieces.

use num_traits::{One, Zero};

use crate::algebra::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    cols: usize,
    rows: Vec<Vec<Scalar>>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            cols,
            rows: vec![vec![Scalar::zero(); cols]; rows],
        }
    }

    pub fn from_rows(cols: usize, rows: Vec<Vec<Scalar>>) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        Matrix { cols, rows }
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.rows[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.rows[i][j] = v;
    }

    /// Reduced row-echelon form in place; returns the pivot columns in order.
    /// Pivots are scaled to 1 and are the only nonzero entries of their columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows.len() {
                break;
            }
            let Some(p) = (r..self.rows.len()).find(|&i| !self.rows[i][c].is_zero()) else {
                continue;
            };
            self.rows.swap(r, p);
            let inv = self.rows[r][c].recip();
            if !inv.is_one() {
                for x in self.rows[r][c..].iter_mut() {
                    *x *= &inv;
                }
            }
            let pivot_row = std::mem::take(&mut self.rows[r]);
            for (i, row) in self.rows.iter_mut().enumerate() {
                if i == r || row[c].is_zero() {
                    continue;
                }
                let f = row[c].clone();
                for (x, y) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
            self.rows[r] = pivot_row;
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of the right null space, one vector per free column (that
    /// coordinate set to 1), in increasing free-column order.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![Scalar::zero(); self.cols];
                v[f] = Scalar::one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -m.rows[r][f].clone();
                }
                v
            })
            .collect()
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.rows
            .iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }
}

/// Connected components of the bipartite graph with `n_rows + n_cols`
/// vertices and an edge for every structurally nonzero entry.
///
/// Returns `(row_sets, col_sets)` per component, each sorted, components
/// ordered by their smallest row (column-only components last, by smallest column).
pub fn bipartite_components(
    n_rows: usize,
    n_cols: usize,
    entries: impl IntoIterator<Item = (usize, usize)>,
) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut parent: Vec<usize> = (0..n_rows + n_cols).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (r, c) in entries {
        let a = find(&mut parent, r);
        let b = find(&mut parent, n_rows + c);
        if a != b {
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut index_of_root = vec![usize::MAX; n_rows + n_cols];
    let mut out: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    for v in 0..n_rows + n_cols {
        let root = find(&mut parent, v);
        if index_of_root[root] == usize::MAX {
            index_of_root[root] = out.len();
            out.push((Vec::new(), Vec::new()));
        }
        let comp = &mut out[index_of_root[root]];
        if v < n_rows {
            comp.0.push(v);
        } else {
            comp.1.push(v - n_rows);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    fn m(rows: &[&[i64]]) -> Matrix {
        let cols = rows[0].len();
        Matrix::from_rows(cols, rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
    }

    #[test]
    fn rref_and_rank() {
        let mut a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        let piv = a.rref();
        assert_eq!(piv, vec![0, 1]);
        assert_eq!(a.row(0), &[int(1), int(0), int(1)]);
        assert_eq!(a.row(1), &[int(0), int(1), int(1)]);
        assert_eq!(a.rank(), 2);
    }

    #[test]
    fn kernel_vectors_are_killed() {
        let a = m(&[&[1, 1, 2, 1]]);
        let k = a.kernel_basis();
        assert_eq!(k.len(), 3);
        assert_eq!(k[2], vec![int(-1), int(0), int(0), int(1)]);
        for v in &k {
            assert!(a.mul_vec(v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn empty_shapes() {
        assert_eq!(Matrix::zeros(0, 3).kernel_basis().len(), 3);
        assert_eq!(Matrix::zeros(2, 0).rank(), 0);
    }

    #[test]
    fn components() {
        // rows 0,1 share col 0; row 2 alone with col 2; col 1 isolated
        let comps = bipartite_components(3, 3, [(0, 0), (1, 0), (2, 2)]);
        assert_eq!(
            comps,
            vec![(vec![0, 1], vec![0]), (vec![2], vec![2]), (vec![], vec![1])]
        );
    }
}
