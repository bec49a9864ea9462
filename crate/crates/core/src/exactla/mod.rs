//! Exact linear algebra over the integers and rationals.
//!
//! Ranks use fraction-free (Bareiss) elimination on integers; kernels and
//! spans use exact rational reduced row echelon forms; integer kernels use
//! Hermite-style column reduction with a tracked unimodular transform.
//! Everything is deterministic: bases are canonicalized before return.

pub mod fm;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

pub type Int = BigInt;
pub type Rat = BigRational;

/// Dense integer matrix, row-major, arbitrary-precision entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Int>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Int>) -> Result<Self, Error> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyMatrix);
        }
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                got: entries.len(),
            });
        }
        Ok(IntMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(rows: Vec<Vec<Int>>) -> Result<Self, Error> {
        if rows.is_empty() || rows[0].is_empty() {
            return Err(Error::EmptyMatrix);
        }
        let cols = rows[0].len();
        let mut entries = Vec::with_capacity(rows.len() * cols);
        let nrows = rows.len();
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    got: r.len(),
                });
            }
            entries.extend(r);
        }
        IntMatrix::new(nrows, cols, entries)
    }

    /// Convenience constructor from machine integers (tests, catalogue data).
    pub fn from_i64(rows: &[Vec<i64>]) -> Result<Self, Error> {
        IntMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&e| Int::from(e)).collect())
                .collect(),
        )
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = vec![Int::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = Int::one();
        }
        IntMatrix {
            rows: n,
            cols: n,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, r: usize, c: usize) -> &Int {
        &self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Int] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Int>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn col(&self, c: usize) -> Vec<Int> {
        (0..self.rows).map(|r| self.entry(r, c).clone()).collect()
    }

    pub fn mul_vec(&self, v: &[Int]) -> Vec<Int> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .map(|(a, x)| a * x)
                    .fold(Int::zero(), |acc, t| acc + t)
            })
            .collect()
    }

    pub fn mul_rat_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .map(|(a, x)| Rat::from(a.clone()) * x)
                    .fold(Rat::zero(), |acc, t| acc + t)
            })
            .collect()
    }

    pub fn kills(&self, v: &[Int]) -> bool {
        self.mul_vec(v).iter().all(|e| e.is_zero())
    }
}

/// Rational vector in canonical form (num-rational keeps every coordinate
/// reduced with a positive denominator).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatVector {
    coords: Vec<Rat>,
}

impl RatVector {
    pub fn new(coords: Vec<Rat>) -> Self {
        RatVector { coords }
    }

    pub fn from_ints(coords: &[Int]) -> Self {
        RatVector {
            coords: coords.iter().map(|c| Rat::from(c.clone())).collect(),
        }
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }
}

/// Rank over the rationals by fraction-free Bareiss elimination.
pub fn rank(m: &IntMatrix) -> usize {
    rank_of_int_rows(&m.row_vecs())
}

pub fn rank_of_int_rows(rows: &[Vec<Int>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let mut a: Vec<Vec<Int>> = rows.to_vec();
    let nrows = a.len();
    let ncols = a[0].len();
    let mut prev = Int::one();
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for r in rank + 1..nrows {
            for c in col + 1..ncols {
                let num = &a[rank][col] * &a[r][c] - &a[r][col] * &a[rank][c];
                a[r][c] = num / &prev;
            }
            a[r][col] = Int::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Reduced row echelon form over Q. Returns the nonzero rows and their
/// pivot columns.
// Elimination updates row i from row r of the same matrix, which the
// range-loop lint cannot express without split_at_mut noise.
#[allow(clippy::needless_range_loop)]
pub fn rref(mat: Vec<Vec<Rat>>) -> (Vec<Vec<Rat>>, Vec<usize>) {
    let mut a = mat;
    let nrows = a.len();
    if nrows == 0 {
        return (Vec::new(), Vec::new());
    }
    let ncols = a[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].clone();
        for x in a[r].iter_mut() {
            *x = &*x / &inv;
        }
        for i in 0..nrows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..ncols {
                    let t = &a[r][j] * &f;
                    a[i][j] = &a[i][j] - t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    (a, pivots)
}

/// Clear denominators and remove integer content; make the leading nonzero
/// entry positive.
pub fn primitive_int_vector(row: &[Rat]) -> Vec<Int> {
    let mut lcm = Int::one();
    for c in row {
        lcm = lcm.lcm(c.denom());
    }
    let mut ints: Vec<Int> = row.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
    normalize_int_vector(&mut ints);
    ints
}

/// Divide by the gcd of the entries and make the first nonzero entry
/// positive. No-op on the zero vector.
pub fn normalize_int_vector(v: &mut [Int]) {
    let mut gcd = Int::zero();
    for c in v.iter() {
        gcd = gcd.gcd(c);
    }
    if gcd.is_zero() {
        return;
    }
    for c in v.iter_mut() {
        *c = &*c / &gcd;
    }
    if let Some(first) = v.iter().find(|c| !c.is_zero()) {
        if first.is_negative() {
            for c in v.iter_mut() {
                *c = -c.clone();
            }
        }
    }
}

fn int_rows_to_rat(rows: &[Vec<Int>]) -> Vec<Vec<Rat>> {
    rows.iter()
        .map(|r| r.iter().map(|c| Rat::from(c.clone())).collect())
        .collect()
}

/// Basis of `{u in Q^n : M u = 0}`, canonicalized: the basis matrix is in
/// reduced row echelon form with denominators cleared and content removed.
pub fn rational_kernel_basis(m: &IntMatrix) -> Vec<RatVector> {
    kernel_int_vectors(&m.row_vecs(), m.cols)
        .into_iter()
        .map(|v| RatVector::from_ints(&v))
        .collect()
}

/// Same kernel computation returning primitive integer representatives of
/// the canonical rational basis vectors (these span ker_Q, not necessarily
/// the full integer kernel lattice).
pub fn kernel_int_vectors(rows: &[Vec<Int>], ncols: usize) -> Vec<Vec<Int>> {
    let (rr, pivots) = rref(int_rows_to_rat(rows));
    let mut free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.sort_unstable();
    let mut basis: Vec<Vec<Rat>> = Vec::new();
    for &f in &free {
        let mut v = vec![Rat::zero(); ncols];
        v[f] = Rat::one();
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = -rr[i][f].clone();
        }
        basis.push(v);
    }
    let (canon, _) = rref(basis);
    canon.iter().map(|r| primitive_int_vector(r)).collect()
}

/// Basis of the lattice `ker_Z(M) = ker_Q(M) ∩ Z^n` via column reduction
/// with a tracked transform, canonicalized by row-style Hermite form.
pub fn integer_kernel_basis(m: &IntMatrix) -> Vec<Vec<Int>> {
    let nrows = m.rows;
    let ncols = m.cols;
    let mut a: Vec<Vec<Int>> = m.row_vecs();
    // u holds the column transform: column j of the reduced matrix equals
    // M * u[.][j]; we store u column-wise for convenient swapping.
    let mut u: Vec<Vec<Int>> = (0..ncols)
        .map(|j| {
            let mut col = vec![Int::zero(); ncols];
            col[j] = Int::one();
            col
        })
        .collect();
    let mut pivot = 0;
    for r in 0..nrows {
        if pivot == ncols {
            break;
        }
        while let Some(j) = (pivot..ncols)
            .filter(|&j| !a[r][j].is_zero())
            .min_by_key(|&j| a[r][j].abs())
        {
            swap_cols(&mut a, &mut u, pivot, j);
            let mut done = true;
            for j2 in pivot + 1..ncols {
                if a[r][j2].is_zero() {
                    continue;
                }
                let q = div_round(&a[r][j2], &a[r][pivot]);
                if !q.is_zero() {
                    sub_col(&mut a, &mut u, j2, pivot, &q);
                }
                if !a[r][j2].is_zero() {
                    done = false;
                }
            }
            if done {
                pivot += 1;
                break;
            }
        }
    }
    let kernel: Vec<Vec<Int>> = (pivot..ncols).map(|j| u[j].clone()).collect();
    debug_assert!(kernel.iter().all(|v| m.kills(v)));
    hnf_rows(kernel)
}

fn swap_cols(a: &mut [Vec<Int>], u: &mut [Vec<Int>], i: usize, j: usize) {
    if i == j {
        return;
    }
    for row in a.iter_mut() {
        row.swap(i, j);
    }
    u.swap(i, j);
}

fn sub_col(a: &mut [Vec<Int>], u: &mut [Vec<Int>], target: usize, source: usize, q: &Int) {
    for row in a.iter_mut() {
        let t = &row[source] * q;
        row[target] = &row[target] - t;
    }
    for k in 0..u[source].len() {
        let t = &u[source][k] * q;
        u[target][k] = &u[target][k] - t;
    }
}

/// Round-to-nearest integer division (ties toward zero magnitude is fine
/// for the gcd descent; any rounding that shrinks the remainder works).
fn div_round(n: &Int, d: &Int) -> Int {
    let (q, r) = n.div_rem(d);
    let two_r = r.abs() * Int::from(2);
    if two_r > d.abs() {
        if (n.is_negative()) == (d.is_negative()) {
            q + Int::one()
        } else {
            q - Int::one()
        }
    } else {
        q
    }
}

/// Canonical row-style Hermite normal form of the lattice spanned by the
/// given rows: pivots positive, entries above a pivot reduced into
/// `[0, pivot)`. Zero rows are dropped.
#[allow(clippy::needless_range_loop)]
pub fn hnf_rows(rows: Vec<Vec<Int>>) -> Vec<Vec<Int>> {
    let mut a: Vec<Vec<Int>> = rows.into_iter().filter(|r| !is_zero_vec(r)).collect();
    if a.is_empty() {
        return a;
    }
    let ncols = a[0].len();
    let nrows = a.len();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        while let Some(p) = (r..nrows)
            .filter(|&i| !a[i][c].is_zero())
            .min_by_key(|&i| a[i][c].abs())
        {
            a.swap(r, p);
            let mut done = true;
            for i in r + 1..nrows {
                if a[i][c].is_zero() {
                    continue;
                }
                let q = div_round(&a[i][c], &a[r][c]);
                if !q.is_zero() {
                    for j in 0..ncols {
                        let t = &a[r][j] * &q;
                        a[i][j] = &a[i][j] - t;
                    }
                }
                if !a[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if a[r][c].is_zero() {
            continue;
        }
        if a[r][c].is_negative() {
            for x in a[r].iter_mut() {
                *x = -x.clone();
            }
        }
        for i in 0..r {
            let q = a[i][c].div_floor(&a[r][c]);
            if !q.is_zero() {
                for j in 0..ncols {
                    let t = &a[r][j] * &q;
                    a[i][j] = &a[i][j] - t;
                }
            }
        }
        r += 1;
    }
    a.truncate(r);
    a
}

fn is_zero_vec(v: &[Int]) -> bool {
    v.iter().all(|c| c.is_zero())
}

/// Dimension over Q of the span of the given rational vectors.
pub fn span_dimension(vectors: &[Vec<Rat>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    let ints: Vec<Vec<Int>> = vectors
        .iter()
        .map(|v| {
            let mut lcm = Int::one();
            for c in v {
                lcm = lcm.lcm(c.denom());
            }
            v.iter().map(|c| c.numer() * (&lcm / c.denom())).collect()
        })
        .collect();
    rank_of_int_rows(&ints)
}

pub fn span_dimension_int(vectors: &[Vec<Int>]) -> usize {
    rank_of_int_rows(vectors)
}

/// Result of an orthogonal-complement computation. The complement of a
/// full-dimensional span has no defining rows, which an `IntMatrix`
/// cannot represent, so that case is an explicit variant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrthogonalComplement {
    Matrix(IntMatrix),
    FullSpan,
}

impl OrthogonalComplement {
    pub fn matrix(&self) -> Option<&IntMatrix> {
        match self {
            OrthogonalComplement::Matrix(m) => Some(m),
            OrthogonalComplement::FullSpan => None,
        }
    }
}

/// Integer matrix whose row space is `span_Q(C)^⊥` in Q^n, so that
/// `ker_Q(result) = span_Q(C)`. Rows are primitive integer vectors.
pub fn orthogonal_complement(vectors: &[Vec<Int>], n: usize) -> OrthogonalComplement {
    let nonzero: Vec<Vec<Int>> = vectors
        .iter()
        .filter(|v| !is_zero_vec(v))
        .cloned()
        .collect();
    if nonzero.is_empty() {
        return OrthogonalComplement::Matrix(IntMatrix::identity(n));
    }
    let rows = kernel_int_vectors(&nonzero, n);
    if rows.is_empty() {
        OrthogonalComplement::FullSpan
    } else {
        OrthogonalComplement::Matrix(IntMatrix::from_rows(rows).expect("nonempty kernel rows"))
    }
}

/// Integer vector `u` with `M u = 0`, `u_i > 0` on `eplus`, `u_i < 0` on
/// `eminus` and `u_i = 0` elsewhere, if one exists. Supports are 0-based
/// column indices. Feasibility over Q with these sign constraints is
/// equivalent (scale any rational solution to an integer one).
pub fn signed_kernel_vector(
    m: &IntMatrix,
    eplus: &[usize],
    eminus: &[usize],
) -> Result<Option<Vec<Int>>, Error> {
    if eplus.is_empty() || eminus.is_empty() {
        return Err(Error::InvalidSupport);
    }
    let n = m.cols;
    let in_range = |s: &[usize]| s.iter().all(|&i| i < n);
    if !in_range(eplus) || !in_range(eminus) {
        return Err(Error::InvalidSupport);
    }
    if eplus.iter().any(|i| eminus.contains(i)) {
        return Err(Error::InvalidSupport);
    }
    // Restrict to the support, flipping signs on eminus so that the
    // question becomes: does ker_Q of the restricted matrix contain a
    // strictly positive vector?
    let mut support: Vec<(usize, bool)> = eplus
        .iter()
        .map(|&i| (i, true))
        .chain(eminus.iter().map(|&i| (i, false)))
        .collect();
    support.sort_unstable();
    let restricted: Vec<Vec<Int>> = (0..m.rows)
        .map(|r| {
            support
                .iter()
                .map(|&(j, pos)| {
                    let e = m.entry(r, j).clone();
                    if pos {
                        e
                    } else {
                        -e
                    }
                })
                .collect()
        })
        .collect();
    let s = support.len();
    let kernel = kernel_int_vectors(&restricted, s);
    if kernel.is_empty() {
        return Ok(None);
    }
    // Strict system over the kernel coordinates: sum_j lambda_j K_j[i] > 0.
    let sys: Vec<Vec<Rat>> = (0..s)
        .map(|i| kernel.iter().map(|k| Rat::from(k[i].clone())).collect())
        .collect();
    let Some(lambda) = fm::solve_strict_positive(&sys) else {
        return Ok(None);
    };
    let y: Vec<Rat> = (0..s)
        .map(|i| {
            kernel
                .iter()
                .zip(&lambda)
                .map(|(k, l)| Rat::from(k[i].clone()) * l)
                .fold(Rat::zero(), |acc, t| acc + t)
        })
        .collect();
    let mut ints = primitive_int_vector(&y);
    // primitive_int_vector makes the first entry positive; all entries are
    // positive here so no sign flip happened.
    debug_assert!(ints.iter().all(|c| c.is_positive()));
    let mut u = vec![Int::zero(); n];
    for (slot, &(j, pos)) in support.iter().enumerate() {
        let v = std::mem::replace(&mut ints[slot], Int::zero());
        u[j] = if pos { v } else { -v };
    }
    debug_assert!(m.kills(&u));
    Ok(Some(u))
}
