//! Exact linear algebra over an arbitrary field scalar, sized for the
//! small dimensions of the tensor checks (at most a few thousand columns).



use crate::scalar::Scalar;

/// Reduces `rows` to reduced row echelon form in place; returns the pivot
/// column of each nonzero row, in order.
pub fn rref<S: Scalar>(rows: &mut Vec<Vec<S>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        let Some(pr) = (row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(row, pr);
        let inv = S::one() / rows[row][col].clone();
        for c in col..ncols {
            rows[row][c] = rows[row][c].clone() * inv.clone();
        }
        for r in 0..rows.len() {
            if r != row && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in col..ncols {
                    let delta = factor.clone() * rows[row][c].clone();
                    rows[r][c] = rows[r][c].clone() - delta;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == rows.len() {
            break;
        }
    }
    rows.truncate(row);
    pivots
}

/// Basis of the kernel of the matrix given by `rows` (as a map from column
/// vectors), one vector per free column, in free-column order.
pub fn kernel_basis<S: Scalar>(rows: &[Vec<S>], ncols: usize) -> Vec<Vec<S>> {
    let mut m: Vec<Vec<S>> = rows.to_vec();
    let pivots = rref(&mut m);
    let is_pivot: Vec<bool> = {
        let mut v = vec![false; ncols];
        for &p in &pivots {
            v[p] = true;
        }
        v
    };
    let mut basis = Vec::new();
    for free in 0..ncols {
        if is_pivot[free] {
            continue;
        }
        let mut v = vec![S::zero(); ncols];
        v[free] = S::one();
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = S::zero() - m[r][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Incrementally maintained row space, for span-closure computations.
pub struct SpanBuilder<S> {
    ncols: usize,
    rows: Vec<Vec<S>>,
    pivots: Vec<usize>,
}

impl<S: Scalar> SpanBuilder<S> {
    pub fn new(ncols: usize) -> Self {
        SpanBuilder { ncols, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn contains(&self, v: &[S]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    fn reduce(&self, v: &[S]) -> Vec<S> {
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let factor = v[p].clone();
                for c in 0..self.ncols {
                    let delta = factor.clone() * row[c].clone();
                    v[c] = v[c].clone() - delta;
                }
            }
        }
        v
    }

    /// Adds a vector; returns true when it enlarged the span.
    pub fn insert(&mut self, v: &[S]) -> bool {
        assert_eq!(v.len(), self.ncols);
        let mut v = self.reduce(v);
        let Some(p) = (0..self.ncols).find(|&c| !v[c].is_zero()) else {
            return false;
        };
        let inv = S::one() / v[p].clone();
        for c in 0..self.ncols {
            v[c] = v[c].clone() * inv.clone();
        }
        self.rows.push(v);
        self.pivots.push(p);
        true
    }

    pub fn rows(&self) -> &[Vec<S>] {
        &self.rows
    }
}
