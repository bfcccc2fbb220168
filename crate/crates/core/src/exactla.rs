//! Exact rational linear algebra.
//!
//! Every kernel, rank and subspace query in the crate goes through this
//! module. Elimination is fraction-free: rows are scaled to integers and
//! reduced with Bareiss updates, so intermediate entries are minors of the
//! input and never need gcd normalization. Only the final canonical form is
//! returned as rationals.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = BigRational;

/// Shorthand for an integer-valued [`Rational`].
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Dense row-major rational matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rational::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self { rows, cols, data }
    }

    /// Builds a matrix from explicit rows. `cols` fixes the width so that a
    /// matrix with zero rows still has a meaningful shape.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let n = rows.len();
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Self {
            rows: n,
            cols,
            data,
        })
    }

    /// Convenience constructor for integer data; panics on ragged input.
    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix rows");
        Self::from_fn(rows.len(), cols, |r, c| rat(rows[r][c]))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Rational) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[Rational]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn mul(&self, rhs: &RatMatrix) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: rhs.rows,
            });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok(self
            .row_iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    /// Stacks `self` on top of `other`.
    pub fn vstack(&self, other: &RatMatrix) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.cols,
            });
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Self {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Exact row rank.
    pub fn rank(&self) -> usize {
        let mut rows = integer_rows(self);
        eliminate(&mut rows, self.cols, false).len()
    }

    /// Canonical reduced row-echelon form, same shape as the input with the
    /// zero rows at the bottom.
    pub fn rref(&self) -> Self {
        let (pivot_rows, _) = self.rref_parts();
        let mut out = Self::zeros(self.rows, self.cols);
        for (r, row) in pivot_rows.into_iter().enumerate() {
            for (c, v) in row.into_iter().enumerate() {
                out.data[r * self.cols + c] = v;
            }
        }
        out
    }

    /// Nonzero RREF rows together with their pivot columns.
    fn rref_parts(&self) -> (Vec<Vec<Rational>>, Vec<usize>) {
        let mut rows = integer_rows(self);
        let pivots = eliminate(&mut rows, self.cols, true);
        let reduced = rows
            .into_iter()
            .zip(&pivots)
            .map(|(row, &pc)| {
                let d = row[pc].clone();
                row.into_iter()
                    .map(|x| Rational::new(x, d.clone()))
                    .collect()
            })
            .collect();
        (reduced, pivots)
    }

    /// Right null space `{v : self * v = 0}`.
    pub fn kernel(&self) -> Subspace {
        let (reduced, pivots) = self.rref_parts();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::one();
            for (row, &pc) in reduced.iter().zip(&pivots) {
                if !row[free].is_zero() {
                    v[pc] = -row[free].clone();
                }
            }
            basis.push(v);
        }
        // Free-column vectors of an RREF are already independent; one more
        // reduction puts them in canonical form.
        let generators =
            RatMatrix::from_rows(self.cols, basis).expect("kernel rows have width cols");
        Subspace::from_generators(generators)
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RatMatrix {}x{} [", self.rows, self.cols)?;
        for row in self.row_iter() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Scales every row by the lcm of its denominators.
fn integer_rows(m: &RatMatrix) -> Vec<Vec<BigInt>> {
    m.row_iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter()
                .map(|x| {
                    if x.is_zero() {
                        BigInt::zero()
                    } else {
                        x.numer() * (&l / x.denom())
                    }
                })
                .collect()
        })
        .collect()
}

/// Fraction-free elimination in place. With `jordan` set, rows above each
/// pivot are cleared too and every pivot row ends up with the same leading
/// value (the last Bareiss divisor). Leaves the pivot rows first, in order,
/// and returns their pivot columns.
fn eliminate(a: &mut [Vec<BigInt>], cols: usize, jordan: bool) -> Vec<usize> {
    let n = a.len();
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == n {
            break;
        }
        let Some(found) = (r..n).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, found);
        let (head, tail) = a.split_at_mut(r);
        let (pivot_row, below) = tail.split_first_mut().expect("r < n");
        let p = pivot_row[c].clone();
        let update = |row: &mut Vec<BigInt>| {
            let f = row[c].clone();
            for j in 0..cols {
                let rj = &pivot_row[j];
                let x = &row[j];
                if x.is_zero() && (f.is_zero() || rj.is_zero()) {
                    continue;
                }
                let mut num = &p * x;
                if !f.is_zero() && !rj.is_zero() {
                    num -= &f * rj;
                }
                debug_assert!((&num % &prev).is_zero(), "inexact Bareiss division");
                row[j] = num / &prev;
            }
        };
        below.iter_mut().for_each(update);
        if jordan {
            head.iter_mut().for_each(update);
        }
        prev = p;
        pivots.push(c);
        r += 1;
    }
    debug_assert!(a[r..].iter().all(|row| row.iter().all(Zero::is_zero)));
    pivots
}

/// A linear subspace of `Q^n`, identified by its canonical RREF basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: RatMatrix,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: RatMatrix::zeros(0, ambient_dim),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: RatMatrix::identity(ambient_dim),
        }
    }

    /// Span of the rows of `generators`.
    pub fn from_generators(generators: RatMatrix) -> Self {
        let ambient_dim = generators.cols();
        let (rows, _) = generators.rref_parts();
        let basis = RatMatrix::from_rows(ambient_dim, rows).expect("rref rows have ambient width");
        Self { ambient_dim, basis }
    }

    /// Span of standard basis vectors `e_i` for the given coordinates.
    pub fn coordinate(ambient_dim: usize, coords: impl IntoIterator<Item = usize>) -> Self {
        let rows = coords
            .into_iter()
            .map(|i| {
                let mut v = vec![Rational::zero(); ambient_dim];
                v[i] = Rational::one();
                v
            })
            .collect();
        Self::from_generators(RatMatrix::from_rows(ambient_dim, rows).expect("coordinate rows"))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    /// Canonical basis, one RREF row per basis vector.
    pub fn basis(&self) -> &RatMatrix {
        &self.basis
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: other.ambient_dim,
            });
        }
        Ok(())
    }

    /// Equality of subspaces: identical canonical bases.
    pub fn equals(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(self.basis == other.basis)
    }

    /// Smallest subspace containing both.
    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        Ok(Self::from_generators(self.basis.vstack(&other.basis)?))
    }

    pub fn contains(&self, v: &[Rational]) -> Result<bool> {
        if v.len() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: v.len(),
            });
        }
        let row = RatMatrix::from_rows(self.ambient_dim, vec![v.to_vec()])?;
        Ok(self.basis.vstack(&row)?.rank() == self.dim())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(other.basis.vstack(&self.basis)?.rank() == other.dim())
    }

    /// `{v ∈ self : m v = 0}`, computed in the coordinates of this subspace's
    /// basis so the elimination only ever sees `dim(self)` columns.
    pub fn restrict_kernel(&self, m: &RatMatrix) -> Result<Subspace> {
        if m.cols() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: m.cols(),
            });
        }
        if self.dim() == 0 {
            return Ok(self.clone());
        }
        let restricted = m.mul(&self.basis.transpose())?;
        let coeffs = restricted.kernel();
        if coeffs.dim() == 0 {
            return Ok(Self::zero(self.ambient_dim));
        }
        Ok(Self::from_generators(coeffs.basis().mul(&self.basis)?))
    }

    /// Maps each basis vector through `f` (a linear coordinate embedding or
    /// projection) and takes the span of the images.
    pub fn map_coords(&self, new_dim: usize, f: impl Fn(usize) -> Option<usize>) -> Subspace {
        let rows = self
            .basis
            .row_iter()
            .map(|row| {
                let mut v = vec![Rational::zero(); new_dim];
                for (i, x) in row.iter().enumerate() {
                    if let Some(j) = f(i) {
                        v[j] = x.clone();
                    }
                }
                v
            })
            .collect();
        Self::from_generators(RatMatrix::from_rows(new_dim, rows).expect("mapped rows"))
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subspace(dim {} in {}) {:?}",
            self.dim(),
            self.ambient_dim,
            self.basis
        )
    }
}

/// Free-function form of [`Subspace::equals`].
pub fn subspace_equal(a: &Subspace, b: &Subspace) -> Result<bool> {
    a.equals(b)
}

/// Free-function form of [`Subspace::sum`].
pub fn subspace_sum(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    a.sum(b)
}
