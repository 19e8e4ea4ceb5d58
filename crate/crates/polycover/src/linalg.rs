//! Exact rational vectors and matrices with fraction-free elimination.
//!
//! Rank and solving run Bareiss-style fraction-free Gaussian elimination on a
//! denominator-cleared integer copy, so intermediate entries stay bounded and
//! every result is exact — vertex and LP certificates depend on it.

use num::{Integer, One, Zero};

use crate::rational::{Int, Rat};
use crate::Error;

/// Dense rational vector.
pub type QVector = Vec<Rat>;

/// Dense row-major rational matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    /// Builds a matrix from rows; all rows must have equal length.
    pub fn from_rows(rows: Vec<QVector>) -> Result<Self, Error> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch(
                "matrix rows have unequal lengths".into(),
            ));
        }
        Ok(QMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows_iter(&self) -> impl Iterator<Item = &[Rat]> {
        (0..self.rows).map(|i| self.row(i))
    }

    pub fn col(&self, j: usize) -> QVector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> QMatrix {
        let mut t = QMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    /// Rank over Q via integer Bareiss elimination on a denominator-cleared copy.
    pub fn rank(&self) -> usize {
        let mut m = clear_denominators(self.rows_iter());
        bareiss_forward(&mut m).0
    }

    /// Exact solution of Mx = b for square nonsingular M; `Ok(None)` when the
    /// system has no unique solution.
    pub fn solve_unique(&self, b: &[Rat]) -> Result<Option<QVector>, Error> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "solve_unique needs a square matrix, got {}x{}",
                self.rows, self.cols
            )));
        }
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "solve_unique: rhs length {} does not match {} rows",
                b.len(),
                self.rows
            )));
        }
        let n = self.rows;
        let mut aug = clear_denominators(
            (0..n).map(|i| -> Vec<Rat> {
                let mut row = self.row(i).to_vec();
                row.push(b[i].clone());
                row
            }),
        );
        let (rank, _) = bareiss_forward(&mut aug);
        if rank < n {
            return Ok(None);
        }
        // Elimination ran on the augmented matrix, so a pivot may sit in the
        // rhs column when the coefficient part is singular; a unique solution
        // needs every pivot on the diagonal.
        if (0..n).any(|i| aug[i][i].is_zero()) {
            return Ok(None);
        }
        // Back substitution on the fraction-free triangular system.
        let mut x = vec![Rat::zero(); n];
        for i in (0..n).rev() {
            let mut acc = Rat::from_int(aug[i][n].clone());
            for (j, xj) in x.iter().enumerate().skip(i + 1) {
                acc -= Rat::from_int(aug[i][j].clone()) * xj;
            }
            x[i] = acc / Rat::from_int(aug[i][i].clone());
        }
        Ok(Some(x))
    }

    /// Exact inverse; `None` when singular.
    pub fn inverse(&self) -> Option<QMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut work: Vec<QVector> = (0..n)
            .map(|i| {
                let mut row = self.row(i).to_vec();
                row.extend((0..n).map(|j| {
                    if i == j {
                        Rat::one()
                    } else {
                        Rat::zero()
                    }
                }));
                row
            })
            .collect();
        // Gauss-Jordan over Q: exactness is all that matters at these sizes.
        for col in 0..n {
            let pivot = (col..n).find(|&i| !work[i][col].is_zero())?;
            work.swap(col, pivot);
            let inv = work[col][col].recip();
            for v in work[col].iter_mut() {
                *v = &*v * &inv;
            }
            for i in 0..n {
                if i != col && !work[i][col].is_zero() {
                    let factor = work[i][col].clone();
                    for j in 0..2 * n {
                        let delta = &factor * &work[col][j];
                        work[i][j] -= delta;
                    }
                }
            }
        }
        let rows = work.into_iter().map(|row| row[n..].to_vec()).collect();
        Some(QMatrix::from_rows(rows).expect("square inverse rows"))
    }

    /// Matrix-vector product Mv.
    pub fn mul_vec(&self, v: &[Rat]) -> QVector {
        assert_eq!(v.len(), self.cols, "mul_vec dimension mismatch");
        self.rows_iter().map(|row| dot(row, v)).collect()
    }

    /// Row-vector product vM.
    pub fn vec_mul(&self, v: &[Rat]) -> QVector {
        assert_eq!(v.len(), self.rows, "vec_mul dimension mismatch");
        (0..self.cols)
            .map(|j| {
                let mut acc = Rat::zero();
                for i in 0..self.rows {
                    acc += &v[i] * &self[(i, j)];
                }
                acc
            })
            .collect()
    }
}

impl std::ops::Index<(usize, usize)> for QMatrix {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for QMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }
}

impl std::fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "QMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        write!(f, "]")
    }
}

/// Exact dot product.
pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    assert_eq!(a.len(), b.len(), "dot dimension mismatch");
    let mut acc = Rat::zero();
    for (x, y) in a.iter().zip(b) {
        acc += x * y;
    }
    acc
}

/// Integer dot product.
pub fn dot_int(a: &[Int], b: &[Int]) -> Int {
    assert_eq!(a.len(), b.len(), "dot_int dimension mismatch");
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Scales each row by the lcm of its denominators (rank-preserving).
fn clear_denominators<I, R>(rows: I) -> Vec<Vec<Int>>
where
    I: Iterator<Item = R>,
    R: AsRef<[Rat]>,
{
    rows.map(|row| {
        let row = row.as_ref();
        let lcm = row
            .iter()
            .fold(Int::one(), |acc, v| acc.lcm(v.denom()));
        row.iter().map(|v| v.numer() * (&lcm / v.denom())).collect()
    })
    .collect()
}

/// In-place fraction-free (Bareiss) forward elimination with row pivoting.
/// Returns (rank, sign of the row permutation). Afterwards the first `rank`
/// rows are upper-triangular with nonzero "pivots" on the diagonal positions
/// of their pivot columns.
fn bareiss_forward(m: &mut [Vec<Int>]) -> (usize, i8) {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut prev = Int::one();
    let mut rank = 0;
    let mut sign = 1i8;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        if pivot != rank {
            m.swap(rank, pivot);
            sign = -sign;
        }
        let pivot_val = m[rank][col].clone();
        for i in rank + 1..rows {
            let lead = std::mem::replace(&mut m[i][col], Int::zero());
            for j in col + 1..cols {
                let v = &pivot_val * &m[i][j] - &lead * &m[rank][j];
                // Exact by the Bareiss identity: prev divides v.
                m[i][j] = v / &prev;
            }
        }
        prev = pivot_val;
        rank += 1;
    }
    (rank, sign)
}

/// Exact determinant of a square integer matrix via Bareiss.
pub fn det_int(rows: &[Vec<Int>]) -> Int {
    let n = rows.len();
    if n == 0 {
        return Int::one();
    }
    assert!(rows.iter().all(|r| r.len() == n), "det_int needs square input");
    let mut m = rows.to_vec();
    let (rank, sign) = bareiss_forward(&mut m);
    if rank < n {
        return Int::zero();
    }
    // After full-rank Bareiss elimination the last pivot IS the determinant
    // (up to the permutation sign).
    let last = m[n - 1]
        .iter()
        .find(|v| !v.is_zero())
        .cloned()
        .unwrap_or_else(Int::zero);
    if sign < 0 {
        -last
    } else {
        last
    }
}

/// One-dimensional kernel of a (d-1)xd full-rank system via signed maximal
/// minors (Cramer). Returns `None` when the rows are dependent.
pub fn kernel_vector(rows: &[Vec<Int>]) -> Option<Vec<Int>> {
    let d = rows.first()?.len();
    assert_eq!(rows.len() + 1, d, "kernel_vector needs (d-1) rows of length d");
    let mut kernel = Vec::with_capacity(d);
    for j in 0..d {
        let minor: Vec<Vec<Int>> = rows
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter_map(|(k, v)| (k != j).then(|| v.clone()))
                    .collect()
            })
            .collect();
        let det = det_int(&minor);
        kernel.push(if j % 2 == 0 { det } else { -det });
    }
    if kernel.iter().all(|v| v.is_zero()) {
        None
    } else {
        Some(kernel)
    }
}

/// Divides an integer vector by the gcd of its entries (no-op on zero).
pub fn make_primitive(v: &mut [Int]) {
    let g = v.iter().fold(Int::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x = &*x / &g;
        }
    }
}

/// True when every entry is ≥ 0.
pub fn is_nonnegative(v: &[Rat]) -> bool {
    v.iter().all(|x| !x.is_negative())
}

#[allow(unused)]
pub fn rat_vec(ints: &[i64]) -> QVector {
    ints.iter().map(|&v| Rat::from(v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(rows: &[&[i64]]) -> QMatrix {
        QMatrix::from_rows(rows.iter().map(|r| rat_vec(r)).collect()).unwrap()
    }

    #[test]
    fn rank_identity_and_zero() {
        assert_eq!(QMatrix::identity(2).rank(), 2);
        assert_eq!(QMatrix::zeros(3, 4).rank(), 0);
    }

    #[test]
    fn rank_of_incidence_rows() {
        // Rows (1,2,0),(0,1,2),(1,0,2): full rank by hand elimination.
        let m = q(&[&[1, 2, 0], &[0, 1, 2], &[1, 0, 2]]);
        assert_eq!(m.rank(), 3);
        assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn rank_handles_rationals_and_dependence() {
        let m = QMatrix::from_rows(vec![
            vec![Rat::new(1, 2), Rat::new(1, 3)],
            vec![Rat::new(3, 2), Rat::from(2)],
        ])
        .unwrap();
        assert_eq!(m.rank(), 2);
        let proportional = QMatrix::from_rows(vec![
            vec![Rat::new(1, 2), Rat::new(1, 3)],
            vec![Rat::new(3, 2), Rat::from(1)],
        ])
        .unwrap();
        assert_eq!(proportional.rank(), 1);
        let dep = q(&[&[1, 2], &[2, 4], &[3, 6]]);
        assert_eq!(dep.rank(), 1);
    }

    #[test]
    fn solve_identity_returns_rhs() {
        let m = QMatrix::identity(3);
        let b = rat_vec(&[4, -1, 9]);
        assert_eq!(m.solve_unique(&b).unwrap().unwrap(), b);
    }

    #[test]
    fn solve_singular_is_none() {
        let m = q(&[&[1, 2], &[2, 4]]);
        assert_eq!(m.solve_unique(&rat_vec(&[1, 2])).unwrap(), None);
    }

    #[test]
    fn solve_binding_system() {
        // {x1+2x2=1, x2+2x3=1, x1+2x3=1} has the unique solution (1/3,1/3,1/3).
        let m = q(&[&[1, 2, 0], &[0, 1, 2], &[1, 0, 2]]);
        let x = m.solve_unique(&rat_vec(&[1, 1, 1])).unwrap().unwrap();
        assert_eq!(x, vec![Rat::new(1, 3), Rat::new(1, 3), Rat::new(1, 3)]);
    }

    #[test]
    fn solve_dimension_mismatch_errors() {
        let m = q(&[&[1, 2, 0], &[0, 1, 2]]);
        assert!(m.solve_unique(&rat_vec(&[1, 1])).is_err());
        let sq = q(&[&[1, 0], &[0, 1]]);
        assert!(sq.solve_unique(&rat_vec(&[1, 1, 1])).is_err());
    }

    #[test]
    fn inverse_round_trip() {
        let m = q(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 1]]);
        let inv = m.inverse().unwrap();
        let mut prod = QMatrix::zeros(3, 3);
        for i in 0..3 {
            let col = inv.mul_vec(&m.col(i));
            for j in 0..3 {
                prod[(j, i)] = col[j].clone();
            }
        }
        assert_eq!(prod, QMatrix::identity(3));
        assert!(q(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn det_matches_cofactor_values() {
        assert_eq!(det_int(&[vec![Int::from(5)]]), Int::from(5));
        let m: Vec<Vec<Int>> = vec![
            [2, 0, 1].map(Int::from).to_vec(),
            [1, 3, 0].map(Int::from).to_vec(),
            [0, 1, 4].map(Int::from).to_vec(),
        ];
        // 2*(12-0) - 0 + 1*(1-0) = 25
        assert_eq!(det_int(&m), Int::from(25));
        let swapped = vec![m[1].clone(), m[0].clone(), m[2].clone()];
        assert_eq!(det_int(&swapped), Int::from(-25));
    }

    #[test]
    fn kernel_vector_is_orthogonal_to_rows() {
        let rows: Vec<Vec<Int>> = vec![
            [1, 1, 0, 0].map(Int::from).to_vec(),
            [0, 1, 1, 0].map(Int::from).to_vec(),
            [0, 0, 1, 1].map(Int::from).to_vec(),
        ];
        let k = kernel_vector(&rows).unwrap();
        for row in &rows {
            assert_eq!(dot_int(row, &k), Int::zero());
        }
        assert!(k.iter().any(|v| !v.is_zero()));
    }
}
