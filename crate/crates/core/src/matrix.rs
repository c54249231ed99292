//! Dense matrices over an exact coefficient ring, plus the handful of
//! structured matrices the standard-graph analysis needs. Sizes in this crate
//! stay tiny (at most 2n x 2n for n around 12), so everything is row-major
//! and allocation-happy by design.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ring::{parse_rational_at, Rational, Ring};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    entries: Vec<R>,
}

pub type QMatrix = Matrix<Rational>;

impl<R: Ring> Matrix<R> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        Matrix {
            rows,
            cols,
            entries: vec![R::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = R::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix { rows, cols, entries }
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Self {
        assert!(!rows.is_empty());
        let cols = rows[0].len();
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Matrix {
            rows: rows.len(),
            cols,
            entries: rows.into_iter().flatten().collect(),
        }
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

    pub fn row(&self, i: usize) -> &[R] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    /// Exact matrix product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let term = a.clone() * other[(k, j)].clone();
                    out[(i, j)] = out[(i, j)].clone() + term;
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::Shape("addition of unequal shapes".into()));
        }
        Ok(Self::from_fn(self.rows, self.cols, |i, j| {
            self[(i, j)].clone() + other[(i, j)].clone()
        }))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::Shape("subtraction of unequal shapes".into()));
        }
        Ok(Self::from_fn(self.rows, self.cols, |i, j| {
            self[(i, j)].clone() - other[(i, j)].clone()
        }))
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| c.clone() * self[(i, j)].clone())
    }

    /// Submatrix on the given row and column index lists (duplicates allowed).
    pub fn submatrix(&self, row_idx: &[usize], col_idx: &[usize]) -> Self {
        Self::from_fn(row_idx.len(), col_idx.len(), |i, j| {
            self[(row_idx[i], col_idx[j])].clone()
        })
    }

    /// Horizontal concatenation (self | other).
    pub fn hcat(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::Shape("hcat with unequal row counts".into()));
        }
        Ok(Self::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                other[(i, j - self.cols)].clone()
            }
        }))
    }

    pub fn column_sums(&self) -> Vec<R> {
        let mut sums = vec![R::zero(); self.cols];
        for i in 0..self.rows {
            for j in 0..self.cols {
                sums[j] = sums[j].clone() + self[(i, j)].clone();
            }
        }
        sums
    }

    pub fn row_sums(&self) -> Vec<R> {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .fold(R::zero(), |acc, x| acc + x.clone())
            })
            .collect()
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    /// Laplace expansion determinant; fine for the tiny sizes used here and
    /// works over any commutative ring (needed for MPoly matrices).
    pub fn det(&self) -> Result<R> {
        if !self.is_square() {
            return Err(Error::Shape("determinant of non-square matrix".into()));
        }
        let n = self.rows;
        if n == 1 {
            return Ok(self[(0, 0)].clone());
        }
        let mut acc = R::zero();
        for j in 0..n {
            if self[(0, j)].is_zero() {
                continue;
            }
            let rest: Vec<usize> = (0..n).filter(|&c| c != j).collect();
            let all: Vec<usize> = (1..n).collect();
            let minor = self.submatrix(&all, &rest).det()?;
            let term = self[(0, j)].clone() * minor;
            acc = if j % 2 == 0 { acc + term } else { acc - term };
        }
        Ok(acc)
    }
}

/// n x n identity with rows/cols {i, j} (1-based, i < j) replaced by the
/// 2x2 block `x`. This is the block embedding written (X_a)^{ij} for vertex
/// weights acting on a pair of strands.
pub fn embed_block<R: Ring>(x: &Matrix<R>, i: usize, j: usize, n: usize) -> Result<Matrix<R>> {
    if x.rows() != 2 || x.cols() != 2 {
        return Err(Error::Shape("embed_block expects a 2x2 block".into()));
    }
    if i == 0 || j == 0 || i >= j || j > n {
        return Err(Error::Index(format!(
            "embed_block needs 1 <= i < j <= n, got i={i}, j={j}, n={n}"
        )));
    }
    let (i, j) = (i - 1, j - 1);
    let mut m = Matrix::identity(n);
    m[(i, i)] = x[(0, 0)].clone();
    m[(i, j)] = x[(0, 1)].clone();
    m[(j, i)] = x[(1, 0)].clone();
    m[(j, j)] = x[(1, 1)].clone();
    Ok(m)
}

// ---------------------------------------------------------------------------
// Field operations (rationals only)
// ---------------------------------------------------------------------------

impl Matrix<Rational> {
    /// Reduced row echelon form and rank. Pivoting is deterministic: first
    /// nonzero entry scanning rows top-down within each column, columns left
    /// to right, so equal row spaces yield identical echelon forms.
    pub fn rref(&self) -> (Self, usize) {
        let mut m = self.clone();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let Some(r) = (pivot_row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(pivot_row, r);
            let inv = m[(pivot_row, col)].recip();
            for j in col..m.cols {
                m[(pivot_row, j)] = m[(pivot_row, j)].clone() * inv.clone();
            }
            for r2 in 0..m.rows {
                if r2 != pivot_row && !m[(r2, col)].is_zero() {
                    let factor = m[(r2, col)].clone();
                    for j in col..m.cols {
                        let t = factor.clone() * m[(pivot_row, j)].clone();
                        m[(r2, j)] = m[(r2, j)].clone() - t;
                    }
                }
            }
            pivot_row += 1;
        }
        (m, pivot_row)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// Exact inverse. Errors with the rank on singular input.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::Shape("inverse of non-square matrix".into()));
        }
        let n = self.rows;
        let aug = self.hcat(&Self::identity(n))?;
        let (r, rank) = aug.rref();
        if rank < n {
            // rank of the augmented system equals rank of self here
            return Err(Error::Singular {
                rank: self.rank(),
                dim: n,
            });
        }
        let left: Vec<usize> = (0..n).collect();
        let right: Vec<usize> = (n..2 * n).collect();
        if r.submatrix(&left, &left) != Self::identity(n) {
            return Err(Error::Singular {
                rank: self.rank(),
                dim: n,
            });
        }
        Ok(r.submatrix(&left, &right))
    }

    /// Schur complement onto the rows/columns in `keep` (0-based), i.e.
    /// A - B D^-1 C after permuting `keep` to the front. `keep` = everything
    /// returns the matrix itself.
    pub fn schur_complement(&self, keep: &[usize]) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::Shape("schur complement of non-square matrix".into()));
        }
        let n = self.rows;
        let mut seen = vec![false; n];
        for &k in keep {
            if k >= n || seen[k] {
                return Err(Error::Index(format!("bad keep index {k}")));
            }
            seen[k] = true;
        }
        let drop: Vec<usize> = (0..n).filter(|&i| !seen[i]).collect();
        if drop.is_empty() {
            return Ok(self.clone());
        }
        let a = self.submatrix(keep, keep);
        let b = self.submatrix(keep, &drop);
        let c = self.submatrix(&drop, keep);
        let d = self.submatrix(&drop, &drop);
        let d_inv = d.inverse()?;
        a.sub(&b.mul(&d_inv)?.mul(&c)?)
    }

    /// True iff the two matrices span the same row space. Because rref is
    /// deterministic this reduces to comparing nonzero echelon rows.
    pub fn row_space_equal(&self, other: &Self) -> Result<bool> {
        if self.cols != other.cols {
            return Err(Error::Shape("row spaces need equal column counts".into()));
        }
        let (ra, ka) = self.rref();
        let (rb, kb) = other.rref();
        if ka != kb {
            return Ok(false);
        }
        let idx: Vec<usize> = (0..ka).collect();
        let all: Vec<usize> = (0..self.cols).collect();
        Ok(ra.submatrix(&idx, &all) == rb.submatrix(&idx, &all))
    }
}

// ---------------------------------------------------------------------------
// Structured matrices (section 4 of the analysis): S, S-tilde, shuffle T,
// the skew form Omega, the longest-element permutation w0, and the cropped
// identities Id0 / Id1.
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StructuredKind {
    /// n x n: 1 on the diagonal, -1 below it, -1 in the top-right corner.
    S,
    /// n x n lower-triangular all-ones partial left inverse of S.
    STilde,
    /// 2m x 2m shuffle sending (J, U) to (U_1, J_1, ..., U_m, J_m).
    T,
    /// Skew form: sum over i<j of e_ij - e_ji.
    Omega,
    /// Longest-element permutation (antidiagonal ones).
    W0,
    /// (n-1) x n identity with the last row removed.
    Id0,
    /// n x (n-1) identity with the last column removed.
    Id1,
}

pub fn structured(kind: StructuredKind, n: usize) -> Result<QMatrix> {
    if n < 2 {
        return Err(Error::Size(format!("structured matrices need n >= 2, got {n}")));
    }
    use StructuredKind::*;
    let one = Rational::one;
    let m = match kind {
        S => QMatrix::from_fn(n, n, |i, j| {
            if i == j {
                one()
            } else if j + 1 == i || (i == 0 && j == n - 1) {
                -one()
            } else {
                Rational::zero()
            }
        }),
        STilde => QMatrix::from_fn(n, n, |i, j| if j <= i { one() } else { Rational::zero() }),
        T => {
            if n % 2 != 0 {
                return Err(Error::Size(format!("shuffle T needs an even size, got {n}")));
            }
            let half = n / 2;
            // row 2i   selects component half + i (a U), row 2i+1 selects i (a J)
            QMatrix::from_fn(n, n, |i, j| {
                let want = if i % 2 == 0 { half + i / 2 } else { i / 2 };
                if j == want {
                    one()
                } else {
                    Rational::zero()
                }
            })
        }
        Omega => QMatrix::from_fn(n, n, |i, j| {
            use std::cmp::Ordering::*;
            match i.cmp(&j) {
                Less => one(),
                Greater => -one(),
                Equal => Rational::zero(),
            }
        }),
        W0 => QMatrix::from_fn(n, n, |i, j| {
            if i + j == n - 1 {
                one()
            } else {
                Rational::zero()
            }
        }),
        Id0 => QMatrix::from_fn(n - 1, n, |i, j| if i == j { one() } else { Rational::zero() }),
        Id1 => QMatrix::from_fn(n, n - 1, |i, j| if i == j { one() } else { Rational::zero() }),
    };
    Ok(m)
}

// ---------------------------------------------------------------------------
// Text form: rows of whitespace-separated rationals, one row per line.
// ---------------------------------------------------------------------------

impl Matrix<Rational> {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|r| r.to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn parse_text(text: &str) -> Result<Self> {
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        for (ln, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let mut row = Vec::new();
            let mut col = 1;
            for tok in line.split_whitespace() {
                // find the token's true column for error reporting
                let off = line[col - 1..].find(tok).map(|o| col + o).unwrap_or(col);
                row.push(parse_rational_at(tok, ln + 1, off)?);
                col = off + tok.len();
            }
            rows.push(row);
        }
        if rows.is_empty() {
            return Err(Error::Parse {
                line: 1,
                col: 1,
                msg: "empty matrix".into(),
            });
        }
        let cols = rows[0].len();
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Parse {
                line: 1,
                col: 1,
                msg: "ragged matrix rows".into(),
            });
        }
        Ok(Self::from_rows(rows))
    }
}

impl<R: Ring> Index<(usize, usize)> for Matrix<R> {
    type Output = R;
    fn index(&self, (i, j): (usize, usize)) -> &R {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.entries[i * self.cols + j]
    }
}

impl<R: Ring> IndexMut<(usize, usize)> for Matrix<R> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut R {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &mut self.entries[i * self.cols + j]
    }
}

impl<R: Ring> fmt::Debug for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{rat, ratio};

    fn qm(rows: &[&[i64]]) -> QMatrix {
        QMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
    }

    #[test]
    fn mul_pinned() {
        let a = qm(&[&[-1, 0], &[2, 1]]);
        let b = qm(&[&[1, 2], &[0, -1]]);
        assert_eq!(a.mul(&b).unwrap(), qm(&[&[-1, -2], &[2, 3]]));
        let i2 = QMatrix::identity(2);
        assert_eq!(i2.mul(&i2).unwrap(), i2);
    }

    #[test]
    fn mul_shape_error() {
        let a = qm(&[&[1, 2]]);
        assert!(matches!(a.mul(&a), Err(Error::Shape(_))));
    }

    #[test]
    fn inverse_diagonal() {
        let a = QMatrix::from_rows(vec![
            vec![rat(2), rat(0)],
            vec![rat(0), ratio(1, 2)],
        ]);
        let inv = a.inverse().unwrap();
        assert_eq!(
            inv,
            QMatrix::from_rows(vec![vec![ratio(1, 2), rat(0)], vec![rat(0), rat(2)]])
        );
        assert_eq!(QMatrix::identity(3).inverse().unwrap(), QMatrix::identity(3));
    }

    #[test]
    fn inverse_singular_reports_rank() {
        let a = qm(&[&[1, 2], &[2, 4]]);
        match a.inverse() {
            Err(Error::Singular { rank, dim }) => {
                assert_eq!((rank, dim), (1, 2));
            }
            other => panic!("expected singularity error, got {other:?}"),
        }
    }

    #[test]
    fn rref_pinned() {
        let a = qm(&[&[1, 2], &[2, 4]]);
        let (r, rank) = a.rref();
        assert_eq!(rank, 1);
        assert_eq!(r, qm(&[&[1, 2], &[0, 0]]));

        let z = QMatrix::zero(3, 3);
        assert_eq!(z.rref().1, 0);
        assert_eq!(QMatrix::identity(4).rref(), (QMatrix::identity(4), 4));
    }

    #[test]
    fn rref_idempotent() {
        let a = qm(&[&[2, 4, 1], &[1, 2, 3], &[3, 6, 4]]);
        let (r, _) = a.rref();
        assert_eq!(r.rref().0, r);
    }

    #[test]
    fn schur_star_to_triangle_response() {
        // star K(3,3,3) with the center last
        let k = qm(&[
            &[3, 0, 0, -3],
            &[0, 3, 0, -3],
            &[0, 0, 3, -3],
            &[-3, -3, -3, 9],
        ]);
        let s = k.schur_complement(&[0, 1, 2]).unwrap();
        assert_eq!(s, qm(&[&[2, -1, -1], &[-1, 2, -1], &[-1, -1, 2]]));
    }

    #[test]
    fn schur_keep_all_and_2x2() {
        let m = qm(&[&[5, 7], &[2, 3]]);
        assert_eq!(m.schur_complement(&[0, 1]).unwrap(), m);
        // [a b; c d] keep {0} -> a - b d^-1 c
        let s = m.schur_complement(&[0]).unwrap();
        assert_eq!(s[(0, 0)], rat(5) - rat(7) * rat(2) / rat(3));
    }

    #[test]
    fn row_space_invariant_under_row_ops() {
        let a = qm(&[&[1, 2, 3], &[0, 1, 1]]);
        let p = qm(&[&[2, 1], &[1, 1]]); // invertible
        let pa = p.mul(&a).unwrap();
        assert!(a.row_space_equal(&pa).unwrap());
        assert!(a.row_space_equal(&a).unwrap());
        let b = qm(&[&[1, 0, 0], &[0, 1, 0]]);
        assert!(!a.row_space_equal(&b).unwrap());
    }

    #[test]
    fn embed_block_pinned() {
        let i2 = QMatrix::identity(2);
        assert_eq!(embed_block(&i2, 1, 2, 3).unwrap(), QMatrix::identity(3));
        let x = qm(&[&[7, 8], &[9, 10]]);
        let e = embed_block(&x, 1, 3, 3).unwrap();
        assert_eq!(e, qm(&[&[7, 0, 8], &[0, 1, 0], &[9, 0, 10]]));
        assert!(embed_block(&x, 2, 2, 3).is_err());
        assert!(embed_block(&x, 1, 4, 3).is_err());
    }

    #[test]
    fn structured_pinned() {
        use StructuredKind::*;
        assert_eq!(
            structured(S, 3).unwrap(),
            qm(&[&[1, 0, -1], &[-1, 1, 0], &[0, -1, 1]])
        );
        // the displayed 6x6 shuffle selects rows (4,1,5,2,6,3)
        let t6 = structured(T, 6).unwrap();
        let expect = qm(&[
            &[0, 0, 0, 1, 0, 0],
            &[1, 0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 1, 0],
            &[0, 1, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0, 1],
            &[0, 0, 1, 0, 0, 0],
        ]);
        assert_eq!(t6, expect);
        assert_eq!(structured(Omega, 2).unwrap(), qm(&[&[0, 1], &[-1, 0]]));
        assert!(structured(S, 1).is_err());
        assert!(structured(T, 5).is_err());
    }

    #[test]
    fn s_tilde_is_partial_left_inverse() {
        use StructuredKind::*;
        for n in 2..=7 {
            let s = structured(S, n).unwrap();
            let st = structured(STilde, n).unwrap();
            let prod = st.mul(&s).unwrap();
            // identity block with last column -1 above a zero last row
            let expect = QMatrix::from_fn(n, n, |i, j| {
                if i == n - 1 {
                    rat(0)
                } else if j == i {
                    rat(1)
                } else if j == n - 1 {
                    rat(-1)
                } else {
                    rat(0)
                }
            });
            assert_eq!(prod, expect);
        }
    }

    #[test]
    fn matrix_text_roundtrip() {
        let m = QMatrix::from_rows(vec![
            vec![ratio(1, 2), rat(-3)],
            vec![rat(0), ratio(7, 5)],
        ]);
        let text = m.to_text();
        assert_eq!(text, "1/2 -3\n0 7/5\n");
        assert_eq!(QMatrix::parse_text(&text).unwrap(), m);
        assert!(QMatrix::parse_text("1 2\n3\n").is_err());
        let err = QMatrix::parse_text("1 x\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, col: 3, .. }));
    }
}
