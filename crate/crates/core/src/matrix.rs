//! Dense exact matrices and the elimination routines built on them.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{rat, Rational};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(d: usize) -> Self {
        let mut m = Self::zeros(d, d);
        for i in 0..d {
            m.set(i, i, rat(1));
        }
        m
    }

    pub fn scalar(d: usize, c: &Rational) -> Self {
        Self::identity(d).scale(c)
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(ExactMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
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

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add_at(&mut self, i: usize, j: usize, v: &Rational) {
        self.data[i * self.cols + j] += v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        if self.cols != o.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(l, j);
                    if !b.is_zero() {
                        out.data[i * o.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch("vector length".into()));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    fn zip_with(&self, o: &Self, f: impl Fn(&Rational, &Rational) -> Rational) -> Result<Self> {
        if self.rows != o.rows || self.cols != o.cols {
            return Err(Error::DimensionMismatch("shape".into()));
        }
        Ok(ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.zip_with(o, |a, b| a + b)
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.zip_with(o, |a, b| a - b)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).fold(Rational::zero(), |acc, i| acc + self.get(i, i))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn diagonal(&self) -> Vec<Rational> {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).collect()
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut m = Self::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                m.set(a, b, self.get(i, j).clone());
            }
        }
        m
    }

    /// Positions of nonzero entries.
    pub fn support(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.rows {
            for j in 0..self.cols {
                if !self.get(i, j).is_zero() {
                    out.push((i, j));
                }
            }
        }
        out
    }

    fn sparse_rows(&self) -> impl Iterator<Item = SparseRow> + '_ {
        (0..self.rows).map(move |i| {
            self.row(i)
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(j, v)| (j, v.clone()))
                .collect()
        })
    }

    pub fn rank(&self) -> usize {
        let mut e = Echelon::new(self.cols);
        for r in self.sparse_rows() {
            e.insert(r);
        }
        e.rank()
    }

    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let mut e = Echelon::new(self.cols);
        for r in self.sparse_rows() {
            e.insert(r);
        }
        e.kernel_basis()
    }

    /// One solution of `self * x = rhs`, or `None` if inconsistent.
    pub fn solve(&self, rhs: &[Rational]) -> Result<Option<Vec<Rational>>> {
        if rhs.len() != self.rows {
            return Err(Error::DimensionMismatch("rhs length".into()));
        }
        let mut e = Echelon::new(self.cols + 1);
        for (i, mut r) in self.sparse_rows().enumerate() {
            if !rhs[i].is_zero() {
                r.push((self.cols, rhs[i].clone()));
            }
            e.insert(r);
        }
        Ok(e.particular_solution())
    }

    /// Stack rows of several matrices with equal column counts.
    pub fn vstack(parts: &[ExactMatrix]) -> Result<Self> {
        let cols = parts.first().map_or(0, |m| m.cols);
        if parts.iter().any(|m| m.cols != cols) {
            return Err(Error::DimensionMismatch("vstack".into()));
        }
        Ok(ExactMatrix {
            rows: parts.iter().map(|m| m.rows).sum(),
            cols,
            data: parts.iter().flat_map(|m| m.data.iter().cloned()).collect(),
        })
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

pub fn mat_mul(a: &ExactMatrix, b: &ExactMatrix) -> Result<ExactMatrix> {
    a.mul(b)
}

/// Scale so the first nonzero coordinate is 1.
pub fn normalize_first(v: &mut [Rational]) {
    if let Some(p) = v.iter().find(|x| !x.is_zero()).cloned() {
        for x in v.iter_mut() {
            *x = &*x / &p;
        }
    }
}

pub fn nullspace(a: &ExactMatrix) -> Vec<Vec<Rational>> {
    a.nullspace()
}

/// Dimension of the algebra of matrices commuting with every generator.
#[allow(clippy::needless_range_loop)]
pub fn commutant_dimension(generators: &[ExactMatrix]) -> Result<usize> {
    let Some(first) = generators.first() else {
        return Err(Error::InvalidInput("no generators".into()));
    };
    let d = first.rows;
    if generators.iter().any(|g| g.rows != d || g.cols != d) {
        return Err(Error::DimensionMismatch(
            "generators must be square of equal size".into(),
        ));
    }
    let mut e = Echelon::new(d * d);
    let var = |a: usize, b: usize| a * d + b;
    for g in generators {
        let nz: Vec<(usize, usize)> = g.support();
        let mut by_row: Vec<Vec<usize>> = vec![Vec::new(); d];
        let mut by_col: Vec<Vec<usize>> = vec![Vec::new(); d];
        for &(l, j) in &nz {
            by_row[l].push(j);
            by_col[j].push(l);
        }
        // (M g - g M)[i][j] = sum_l M[i][l] g[l][j] - g[i][l] M[l][j]
        for i in 0..d {
            for j in 0..d {
                let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
                for &l in &by_col[j] {
                    *acc.entry(var(i, l)).or_insert_with(Rational::zero) += g.get(l, j);
                }
                for &l in &by_row[i] {
                    *acc.entry(var(l, j)).or_insert_with(Rational::zero) -= g.get(i, l);
                }
                let row: SparseRow = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
                if !row.is_empty() {
                    e.insert(row);
                }
            }
        }
    }
    Ok(d * d - e.rank())
}

/// Basis of the joint eigenspace ∩ ker(op_i - λ_i).
pub fn simultaneous_eigenspace(ops: &[ExactMatrix], eigenvalues: &[Rational]) -> Result<Vec<Vec<Rational>>> {
    if ops.len() != eigenvalues.len() {
        return Err(Error::DimensionMismatch("one eigenvalue per operator".into()));
    }
    let Some(first) = ops.first() else {
        return Ok(Vec::new());
    };
    let d = first.rows;
    if ops.iter().any(|m| m.rows != d || m.cols != d) {
        return Err(Error::DimensionMismatch(
            "operators must be square of equal size".into(),
        ));
    }
    #[cfg(debug_assertions)]
    if d <= 32 {
        for (i, a) in ops.iter().enumerate() {
            for b in &ops[i + 1..] {
                debug_assert!(a.mul(b)? == b.mul(a)?, "operators do not commute");
            }
        }
    }
    let mut e = Echelon::new(d);
    for (m, lam) in ops.iter().zip(eigenvalues) {
        for i in 0..d {
            let mut row: SparseRow = m
                .row(i)
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(j, v)| (j, v.clone()))
                .collect();
            match row.binary_search_by_key(&i, |(j, _)| *j) {
                Ok(p) => {
                    row[p].1 -= lam;
                    if row[p].1.is_zero() {
                        row.remove(p);
                    }
                }
                Err(p) => {
                    if !lam.is_zero() {
                        row.insert(p, (i, -lam.clone()));
                    }
                }
            }
            if !row.is_empty() {
                e.insert(row);
            }
        }
    }
    Ok(e.kernel_basis())
}

/// Sparse row: strictly increasing column indices, nonzero values.
pub type SparseRow = Vec<(usize, Rational)>;

/// Incremental row echelon form over sparse rows; every stored row has
/// leading coefficient 1 and no entries in other rows' pivot columns
/// that existed when it was inserted.
#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    pivot_of: BTreeMap<usize, usize>,
    rows: Vec<SparseRow>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon {
            ncols,
            pivot_of: BTreeMap::new(),
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// Remove every pivot-column entry of `row`.
    pub fn reduce(&self, row: SparseRow) -> SparseRow {
        let mut work: BTreeMap<usize, Rational> = row.into_iter().collect();
        let mut cursor = 0usize;
        loop {
            let next = work
                .range(cursor..)
                .find(|(c, _)| self.pivot_of.contains_key(c))
                .map(|(c, v)| (*c, v.clone()));
            let Some((c, v)) = next else { break };
            let prow = &self.rows[self.pivot_of[&c]];
            for (pc, pv) in prow {
                let e = work.entry(*pc).or_insert_with(Rational::zero);
                *e -= &v * pv;
                if e.is_zero() {
                    work.remove(pc);
                }
            }
            cursor = c + 1;
        }
        work.into_iter().collect()
    }

    /// Insert a row; returns whether it increased the rank.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let r = self.reduce(row);
        let Some((lead, lv)) = r.first().cloned() else {
            return false;
        };
        let inv = Rational::one() / lv;
        let r: SparseRow = r.into_iter().map(|(c, v)| (c, v * &inv)).collect();
        self.pivot_of.insert(lead, self.rows.len());
        self.rows.push(r);
        true
    }

    pub fn contains(&self, row: SparseRow) -> bool {
        self.reduce(row).is_empty()
    }

    /// Fully reduced rows keyed by pivot column.
    fn rref(&self) -> BTreeMap<usize, SparseRow> {
        let mut done: BTreeMap<usize, SparseRow> = BTreeMap::new();
        for (&p, &idx) in self.pivot_of.iter().rev() {
            let mut work: BTreeMap<usize, Rational> = self.rows[idx].iter().cloned().collect();
            let later: Vec<usize> = work
                .keys()
                .copied()
                .filter(|c| *c != p && done.contains_key(c))
                .collect();
            for c in later {
                let Some(v) = work.get(&c).cloned() else { continue };
                for (pc, pv) in &done[&c] {
                    let e = work.entry(*pc).or_insert_with(Rational::zero);
                    *e -= &v * pv;
                    if e.is_zero() {
                        work.remove(pc);
                    }
                }
            }
            done.insert(p, work.into_iter().collect());
        }
        done
    }

    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let rref = self.rref();
        let mut basis = Vec::new();
        for f in (0..self.ncols).filter(|c| !self.pivot_of.contains_key(c)) {
            let mut v = vec![Rational::zero(); self.ncols];
            v[f] = rat(1);
            for (p, row) in &rref {
                if let Ok(pos) = row.binary_search_by_key(&f, |(c, _)| *c) {
                    v[*p] = -row[pos].1.clone();
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Treat the last column as the right-hand side.
    fn particular_solution(&self) -> Option<Vec<Rational>> {
        let n = self.ncols - 1;
        if self.pivot_of.contains_key(&n) {
            return None;
        }
        let rref = self.rref();
        let mut x = vec![Rational::zero(); n];
        for (p, row) in &rref {
            if let Some((c, v)) = row.last() {
                if *c == n {
                    x[*p] = v.clone();
                }
            }
        }
        Some(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::frac;

    fn m(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_i64(rows).unwrap()
    }

    #[test]
    fn products() {
        let id = ExactMatrix::identity(2);
        assert_eq!(id.mul(&id).unwrap(), id);
        let flip = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(flip.mul(&flip).unwrap(), id);
        assert!(m(&[&[1, 2, 3]]).mul(&id).is_err());
    }

    #[test]
    fn nullspaces() {
        assert_eq!(ExactMatrix::zeros(2, 2).nullspace().len(), 2);
        assert!(ExactMatrix::identity(2).nullspace().is_empty());
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        let ns = a.nullspace();
        assert_eq!(ns.len(), 3 - a.rank());
        for v in &ns {
            assert!(a.mul_vec(v).unwrap().iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn solving() {
        let a = m(&[&[2, 1], &[1, 3]]);
        let x = a.solve(&[rat(3), rat(4)]).unwrap().unwrap();
        assert_eq!(x, vec![rat(1), rat(1)]);
        let s = m(&[&[1, 1], &[1, 1]]);
        assert!(s.solve(&[rat(1), rat(2)]).unwrap().is_none());
        let y = m(&[&[2, 0]]).solve(&[rat(1)]).unwrap().unwrap();
        assert_eq!(y, vec![frac(1, 2), rat(0)]);
    }

    #[test]
    fn commutants() {
        assert_eq!(commutant_dimension(&[ExactMatrix::identity(3)]).unwrap(), 9);
        let e11 = m(&[&[1, 0], &[0, 0]]);
        let e12 = m(&[&[0, 1], &[0, 0]]);
        let e21 = m(&[&[0, 0], &[1, 0]]);
        assert_eq!(commutant_dimension(&[e11, e12, e21]).unwrap(), 1);
        assert!(commutant_dimension(&[ExactMatrix::identity(2), ExactMatrix::identity(3)]).is_err());
    }

    #[test]
    fn eigenspaces() {
        let id = ExactMatrix::identity(3);
        assert_eq!(
            simultaneous_eigenspace(std::slice::from_ref(&id), &[rat(1)])
                .unwrap()
                .len(),
            3
        );
        assert!(simultaneous_eigenspace(&[id], &[rat(0)]).unwrap().is_empty());
        let d = m(&[&[2, 0], &[0, 5]]);
        let v = simultaneous_eigenspace(&[d], &[rat(5)]).unwrap();
        assert_eq!(v, vec![vec![rat(0), rat(1)]]);
    }
}
