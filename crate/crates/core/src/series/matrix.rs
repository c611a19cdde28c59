use std::fmt;

use super::field::Field;
use super::scalar::LaurentScalar;
use super::SeriesError;

/// Dense matrix of Laurent polynomials, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentMatrix<F: Field> {
    rows: usize,
    cols: usize,
    entries: Vec<LaurentScalar<F>>,
}

impl<F: Field> LaurentMatrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        LaurentMatrix { rows, cols, entries: vec![LaurentScalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize, ctx: &F::Ctx) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, LaurentScalar::one(ctx));
        }
        m
    }

    /// Diagonal matrix `diag(t^e_0, t^e_1, ...)`.
    pub fn diag_powers(ctx: &F::Ctx, exps: &[i32]) -> Self {
        let mut m = Self::zeros(exps.len(), exps.len());
        for (i, &e) in exps.iter().enumerate() {
            m.set(i, i, LaurentScalar::t_pow(ctx, e));
        }
        m
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(columns: &[Vec<LaurentScalar<F>>]) -> Self {
        let rows = columns.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "ragged column list");
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn from_rows(rows: &[Vec<LaurentScalar<F>>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged row list");
            for (j, x) in row.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentScalar<F> {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: LaurentScalar<F>) {
        self.entries[i * self.cols + j] = x;
    }

    pub fn column(&self, j: usize) -> Vec<LaurentScalar<F>> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<LaurentScalar<F>>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(j, i, self.get(i, j).clone());
            }
        }
        m
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut m = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = LaurentScalar::zero();
                for k in 0..self.cols {
                    acc = acc.add(&self.get(i, k).mul(other.get(k, j)));
                }
                m.set(i, j, acc);
            }
        }
        m
    }

    /// Applies `f` to every entry.
    pub fn map(&self, f: impl Fn(&LaurentScalar<F>) -> LaurentScalar<F>) -> Self {
        LaurentMatrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(f).collect() }
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: i32) -> Self {
        self.map(|x| x.shift(k))
    }

    /// Smallest valuation among the entries, `None` for the zero matrix.
    pub fn min_val(&self) -> Option<i32> {
        self.entries.iter().filter_map(LaurentScalar::val).min()
    }

    /// Selects the given columns.
    pub fn select_columns(&self, idx: &[usize]) -> Self {
        Self::from_columns(&idx.iter().map(|&j| self.column(j)).collect::<Vec<_>>())
    }

    /// Concatenates the columns of `self` and `other`.
    pub fn hconcat(&self, other: &Self) -> Self {
        let mut cols = self.columns();
        cols.extend(other.columns());
        Self::from_columns(&cols)
    }

    pub fn determinant(&self) -> Result<LaurentScalar<F>, SeriesError> {
        if self.rows != self.cols {
            return Err(SeriesError::NotSquare { rows: self.rows, cols: self.cols });
        }
        Ok(det_rec(self, &(0..self.rows).collect::<Vec<_>>(), 0))
    }

    /// Adjugate of a square matrix.
    pub fn adjugate(&self) -> Result<Self, SeriesError> {
        let n = self.rows;
        if n != self.cols {
            return Err(SeriesError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let mut adj = Self::zeros(n, n);
        if n == 1 {
            // adj of a 1x1 matrix is [1]; derive the unit from the entry.
            let one = self.get(0, 0).leading().map(|c| LaurentScalar::one(&c.ctx()));
            adj.set(0, 0, one.unwrap_or_default());
            return Ok(adj);
        }
        for i in 0..n {
            for j in 0..n {
                let minor = self.minor(i, j);
                let d = minor.determinant()?;
                let cof = if (i + j) % 2 == 0 { d } else { d.neg() };
                adj.set(j, i, cof);
            }
        }
        Ok(adj)
    }

    fn minor(&self, skip_row: usize, skip_col: usize) -> Self {
        let rows: Vec<Vec<_>> = (0..self.rows)
            .filter(|&i| i != skip_row)
            .map(|i| {
                (0..self.cols).filter(|&j| j != skip_col).map(|j| self.get(i, j).clone()).collect()
            })
            .collect();
        Self::from_rows(&rows)
    }
}

fn det_rec<F: Field>(m: &LaurentMatrix<F>, cols: &[usize], row: usize) -> LaurentScalar<F> {
    if cols.len() == 1 {
        return m.get(row, cols[0]).clone();
    }
    let mut acc = LaurentScalar::zero();
    for (k, &c) in cols.iter().enumerate() {
        let entry = m.get(row, c);
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = entry.mul(&det_rec(m, &rest, row + 1));
        acc = if k % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

impl<F: Field> fmt::Debug for LaurentMatrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_text()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Column vector helpers used by the elimination routines.
type Column<F> = Vec<LaurentScalar<F>>;

fn axpy<F: Field>(target: &mut Column<F>, factor: &LaurentScalar<F>, source: &Column<F>) {
    for (t, s) in target.iter_mut().zip(source) {
        if !s.is_zero() {
            *t = t.sub(&factor.mul(s));
        }
    }
}

fn truncate_column<F: Field>(col: &mut Column<F>, bound: i32) {
    for x in col.iter_mut() {
        *x = x.truncate_below(bound);
    }
}

/// Finds the first (in lexicographic order) triple of columns with nonzero
/// 3x3 determinant.
fn independent_triple<F: Field>(m: &LaurentMatrix<F>) -> Option<[usize; 3]> {
    let k = m.cols();
    for a in 0..k {
        for b in a + 1..k {
            for c in b + 1..k {
                let sub = m.select_columns(&[a, b, c]);
                if !sub.determinant().ok()?.is_zero() {
                    return Some([a, b, c]);
                }
            }
        }
    }
    None
}

/// Canonical basis of the O-module spanned by the columns of a 3-row matrix.
///
/// The result is upper triangular: column `r` has zeros below row `r`, its
/// row-`r` entry is a pure power `t^a_r`, and every entry above a pivot in
/// row `i` only has exponents below `a_i`. Rows are processed bottom to top;
/// the pivot is the entry of minimal valuation, leftmost on ties.
pub fn hermite_over_o<F: Field>(
    generators: &LaurentMatrix<F>,
    ctx: &F::Ctx,
) -> Result<LaurentMatrix<F>, SeriesError> {
    const DIM: usize = 3;
    if generators.rows() != DIM {
        return Err(SeriesError::RankDeficient);
    }
    let triple = independent_triple(generators).ok_or(SeriesError::RankDeficient)?;
    let square = generators.select_columns(&triple);
    let det_val = square.determinant()?.val().expect("nonzero determinant");
    let adj = square.adjugate()?;
    // t^bound O^3 lies in the span of the square block, hence in the module.
    let bound = (0..DIM)
        .flat_map(|i| (0..DIM).map(move |j| (i, j)))
        .filter_map(|(i, j)| adj.get(i, j).val())
        .map(|v| det_val - v)
        .max()
        .expect("adjugate of an invertible matrix is nonzero");

    // Truncating one past `bound` keeps the pivots t^bound intact.
    let keep = bound + 1;
    let mut work: Vec<Column<F>> = generators
        .columns()
        .into_iter()
        .map(|mut c| {
            truncate_column(&mut c, keep);
            c
        })
        .collect();
    for r in 0..DIM {
        let mut e = vec![LaurentScalar::zero(); DIM];
        e[r] = LaurentScalar::t_pow(ctx, bound);
        work.push(e);
    }

    let mut basis: Vec<Column<F>> = vec![Vec::new(); DIM];
    for r in (0..DIM).rev() {
        work.retain(|c| c.iter().any(|x| !x.is_zero()));
        let (pos, a) = work
            .iter()
            .enumerate()
            .filter_map(|(idx, c)| c[r].val().map(|v| (idx, v)))
            .min_by_key(|&(idx, v)| (v, idx))
            .ok_or(SeriesError::RankDeficient)?;
        let mut pivot = work.remove(pos);
        let unit = pivot[r].shift(-a);
        let lowest = pivot.iter().filter_map(LaurentScalar::val).min().unwrap_or(a);
        let unit_inv = unit.unit_inverse(keep - lowest);
        for x in pivot.iter_mut() {
            *x = x.mul_below(&unit_inv, keep);
        }
        debug_assert_eq!(pivot[r], LaurentScalar::t_pow(ctx, a));
        for col in work.iter_mut() {
            if col[r].is_zero() {
                continue;
            }
            let q = col[r].shift(-a);
            axpy(col, &q, &pivot);
            truncate_column(col, keep);
            debug_assert!(col[r].is_zero());
        }
        basis[r] = pivot;
    }

    // Reduce the entries above each pivot.
    for j in 0..DIM {
        for i in (0..j).rev() {
            let a_i = basis[i][i].val().expect("pivot");
            let q = basis[j][i].part_at_least(a_i).shift(-a_i);
            if !q.is_zero() {
                let pivot_col = basis[i].clone();
                axpy(&mut basis[j], &q, &pivot_col);
            }
        }
    }
    Ok(LaurentMatrix::from_columns(&basis))
}

/// Elementary-divisor exponents of a square nonsingular matrix, descending.
///
/// The matrix is first scaled into `Mat(O)`; every exponent is then bounded
/// by the valuation of the determinant, so the elimination can run modulo a
/// power of `t` just above that bound.
pub fn smith_exponents<F: Field>(m: &LaurentMatrix<F>) -> Result<Vec<i32>, SeriesError> {
    let n = m.rows();
    if n != m.cols() {
        return Err(SeriesError::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    let det = m.determinant()?;
    let det_val = det.val().ok_or(SeriesError::SingularMatrix)?;
    let shift = m.min_val().expect("nonsingular matrix has a nonzero entry");
    let bound = det_val - shift * n as i32 + 1;
    let mut rows: Vec<Column<F>> = (0..n)
        .map(|i| (0..n).map(|j| m.get(i, j).shift(-shift).truncate_below(bound)).collect())
        .collect();
    let mut exps = Vec::with_capacity(n);
    while !rows.is_empty() {
        let width = rows[0].len();
        let (pi, pj, a) = rows
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().enumerate().map(move |(j, x)| (i, j, x)))
            .filter_map(|(i, j, x)| x.val().map(|v| (i, j, v)))
            .min_by_key(|&(i, j, v)| (v, i, j))
            .ok_or(SeriesError::SingularMatrix)?;
        rows.swap(0, pi);
        for row in rows.iter_mut() {
            row.swap(0, pj);
        }
        let pivot_row = rows.remove(0);
        let unit_inv = pivot_row[0].shift(-a).unit_inverse(bound);
        for row in rows.iter_mut() {
            if row[0].is_zero() {
                continue;
            }
            let factor = row[0].shift(-a).mul_below(&unit_inv, bound);
            axpy(row, &factor, &pivot_row);
            truncate_column(row, bound);
            debug_assert!(row[0].is_zero());
        }
        for row in rows.iter_mut() {
            row.remove(0);
        }
        debug_assert!(rows.iter().all(|r| r.len() == width - 1));
        exps.push(a + shift);
    }
    exps.sort_unstable_by(|a, b| b.cmp(a));
    Ok(exps)
}

/// Solves `B x = v` for upper-triangular `B` whose diagonal entries are pure
/// powers of `t`. Exact: only shifts are needed to divide by the pivots.
pub fn solve_upper_pure<F: Field>(b: &LaurentMatrix<F>, v: &[LaurentScalar<F>]) -> Vec<LaurentScalar<F>> {
    let n = b.rows();
    let mut x = vec![LaurentScalar::zero(); n];
    for i in (0..n).rev() {
        let mut acc = v[i].clone();
        for j in i + 1..n {
            if !b.get(i, j).is_zero() && !x[j].is_zero() {
                acc = acc.sub(&b.get(i, j).mul(&x[j]));
            }
        }
        let pivot = b.get(i, i);
        let a = pivot.val().expect("pure-power pivot");
        debug_assert_eq!(pivot.term_count(), 1);
        let c_inv = pivot.leading().and_then(Field::inv).expect("nonzero pivot");
        x[i] = acc.shift(-a).scale(&c_inv);
    }
    x
}

/// Inverse of an upper-triangular matrix with pure-power diagonal.
pub fn inverse_upper_pure<F: Field>(b: &LaurentMatrix<F>, ctx: &F::Ctx) -> LaurentMatrix<F> {
    let n = b.rows();
    let id = LaurentMatrix::identity(n, ctx);
    let cols: Vec<Column<F>> = (0..n).map(|j| solve_upper_pure(b, &id.column(j))).collect();
    LaurentMatrix::from_columns(&cols)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::field::Rational;

    type S = LaurentScalar<Rational>;

    fn s(terms: &[(i32, i64)]) -> S {
        S::from_terms(terms.iter().map(|&(e, c)| (e, Rational::from_i64(&(), c))))
    }

    fn t(e: i32) -> S {
        s(&[(e, 1)])
    }

    fn z() -> S {
        S::zero()
    }

    #[test]
    fn determinant_of_triangular() {
        let m = LaurentMatrix::from_rows(&[
            vec![t(1), s(&[(0, 3)]), z()],
            vec![z(), t(-2), s(&[(5, 1)])],
            vec![z(), z(), s(&[(0, 2)])],
        ]);
        assert_eq!(m.determinant().unwrap(), s(&[(-1, 2)]));
    }

    #[test]
    fn adjugate_times_matrix_is_det() {
        let m = LaurentMatrix::from_rows(&[
            vec![s(&[(0, 1), (1, 1)]), t(-1), s(&[(0, 2)])],
            vec![t(2), s(&[(0, -1)]), t(1)],
            vec![s(&[(0, 1)]), s(&[(0, 1)]), s(&[(3, 1)])],
        ]);
        let det = m.determinant().unwrap();
        let prod = m.adjugate().unwrap().mul(&m);
        for i in 0..3 {
            for j in 0..3 {
                let want = if i == j { det.clone() } else { z() };
                assert_eq!(prod.get(i, j), &want);
            }
        }
    }

    #[test]
    fn smith_of_diagonal_and_identity() {
        let d = LaurentMatrix::<Rational>::diag_powers(&(), &[-2, -1, 0]);
        assert_eq!(smith_exponents(&d).unwrap(), vec![0, -1, -2]);
        let id = LaurentMatrix::<Rational>::identity(3, &());
        assert_eq!(smith_exponents(&id).unwrap(), vec![0, 0, 0]);
        let sing = LaurentMatrix::from_rows(&[
            vec![t(0), t(1), z()],
            vec![t(0), t(1), z()],
            vec![z(), z(), t(0)],
        ]);
        assert_eq!(smith_exponents(&sing), Err(SeriesError::SingularMatrix));
    }

    #[test]
    fn smith_non_diagonal() {
        // [[1, 1], [0, t^2]] has divisors 1 and t^2; [[t, t], [t, t + t^3]] has t and t^3.
        let a = LaurentMatrix::from_rows(&[vec![t(0), t(0)], vec![z(), t(2)]]);
        assert_eq!(smith_exponents(&a).unwrap(), vec![2, 0]);
        let b = LaurentMatrix::from_rows(&[vec![t(1), t(1)], vec![t(1), s(&[(1, 1), (3, 1)])]]);
        assert_eq!(smith_exponents(&b).unwrap(), vec![3, 1]);
    }

    #[test]
    fn hermite_identity() {
        let id = LaurentMatrix::<Rational>::identity(3, &());
        assert_eq!(hermite_over_o(&id, &()).unwrap(), id);
    }

    #[test]
    fn hermite_rank_deficient() {
        let m = LaurentMatrix::from_columns(&[vec![t(0), z(), z()], vec![t(1), z(), z()], vec![z(), t(0), z()]]);
        assert_eq!(hermite_over_o(&m, &()), Err(SeriesError::RankDeficient));
    }

    #[test]
    fn triangular_inverse() {
        let b = LaurentMatrix::from_rows(&[
            vec![t(1), s(&[(0, 3)]), s(&[(-1, 2)])],
            vec![z(), t(-2), s(&[(-3, 1)])],
            vec![z(), z(), t(2)],
        ]);
        let inv = inverse_upper_pure(&b, &());
        assert_eq!(b.mul(&inv), LaurentMatrix::identity(3, &()));
    }
}
