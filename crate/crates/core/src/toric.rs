//! Integer vector configurations and the lattice data of their toric
//! ideals: pointedness, gradings, fibers, Graver bases and minimal
//! binomial generating sets.

use std::collections::{HashMap, HashSet, VecDeque};

use num_traits::{Signed, Zero};

use crate::budget::Budget;
use crate::error::Error;
use crate::exactla::{self, fm, IntMatrix};
use crate::{Int, Rat};

/// Element of `ker_Z(A)` in canonical sign: the first nonzero coordinate
/// is positive. Encodes the binomial `x^{u+} - x^{u-}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeVector {
    coords: Vec<Int>,
}

impl LatticeVector {
    /// Wrap a vector, flipping sign if needed so the representative is
    /// canonical. The zero vector is rejected.
    pub fn new(mut coords: Vec<Int>) -> Result<Self, Error> {
        let Some(first) = coords.iter().find(|c| !c.is_zero()) else {
            return Err(Error::NotInKernel);
        };
        if first.is_negative() {
            for c in coords.iter_mut() {
                *c = -c.clone();
            }
        }
        Ok(LatticeVector { coords })
    }

    pub fn from_i64(coords: &[i64]) -> Result<Self, Error> {
        LatticeVector::new(coords.iter().map(|&c| Int::from(c)).collect())
    }

    pub fn coords(&self) -> &[Int] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// Componentwise positive part `u+`.
    pub fn plus(&self) -> Vec<Int> {
        self.coords
            .iter()
            .map(|c| {
                if c.is_positive() {
                    c.clone()
                } else {
                    Int::zero()
                }
            })
            .collect()
    }

    /// Componentwise negative part `u-` (nonnegative entries).
    pub fn minus(&self) -> Vec<Int> {
        self.coords
            .iter()
            .map(|c| {
                if c.is_negative() {
                    -c.clone()
                } else {
                    Int::zero()
                }
            })
            .collect()
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.coords.len())
            .filter(|&i| !self.coords[i].is_zero())
            .collect()
    }

    pub fn support_plus(&self) -> Vec<usize> {
        (0..self.coords.len())
            .filter(|&i| self.coords[i].is_positive())
            .collect()
    }

    pub fn support_minus(&self) -> Vec<usize> {
        (0..self.coords.len())
            .filter(|&i| self.coords[i].is_negative())
            .collect()
    }

    /// True when dividing by the gcd of the coordinates changes nothing.
    pub fn is_primitive(&self) -> bool {
        let mut g = Int::zero();
        for c in &self.coords {
            g = num_integer::gcd(g, c.abs());
        }
        g == Int::from(1)
    }
}

/// How a generator set was obtained, which determines what conclusions
/// it supports (radical generation is never inferred, only declared).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneratorMode {
    MinimalGenerators,
    RadicalGenerators,
    UserSupplied,
}

/// A set of kernel vectors whose binomials generate (or are claimed to
/// generate) the toric ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet {
    pub vectors: Vec<LatticeVector>,
    pub mode: GeneratorMode,
    pub provenance: String,
}

impl GeneratorSet {
    pub fn new(mut vectors: Vec<LatticeVector>, mode: GeneratorMode, provenance: &str) -> Self {
        vectors.sort();
        vectors.dedup();
        GeneratorSet {
            vectors,
            mode,
            provenance: provenance.to_string(),
        }
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }
}

/// Multidegree `A u+` of a kernel vector, with its value under the fixed
/// positive grading for ordering.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ADegree {
    pub weight: Int,
    pub vector: Vec<Int>,
}

/// A pointed configuration: an integer matrix whose columns all lie in an
/// open linear halfspace. Caches a primitive integer grading witnessing
/// pointedness and the kernel dimension.
#[derive(Clone, Debug)]
pub struct Configuration {
    matrix: IntMatrix,
    grading: Vec<Int>,
    height: usize,
}

impl Configuration {
    pub fn new(matrix: IntMatrix) -> Result<Self, Error> {
        let grading = positive_grading(&matrix).ok_or(Error::NotPointed)?;
        let height = matrix.cols() - exactla::rank(&matrix);
        Ok(Configuration {
            matrix,
            grading,
            height,
        })
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Result<Self, Error> {
        Configuration::new(IntMatrix::from_i64(rows)?)
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    /// Primitive integer vector `g` with `g . a_j > 0` for every column.
    pub fn grading(&self) -> &[Int] {
        &self.grading
    }

    /// Dimension of `ker_Q(A)`.
    pub fn height(&self) -> usize {
        self.height
    }

    pub fn cols(&self) -> usize {
        self.matrix.cols()
    }

    pub fn rows(&self) -> usize {
        self.matrix.rows()
    }

    /// Grading weight `g . b` of a multidegree.
    pub fn weight(&self, b: &[Int]) -> Int {
        dot(&self.grading, b)
    }

    pub fn degree_of(&self, u: &LatticeVector) -> ADegree {
        let vector = self.matrix.mul_vec(&u.plus());
        ADegree {
            weight: self.weight(&vector),
            vector,
        }
    }

    /// Lattice basis of `ker_Z(A)`, canonicalized.
    pub fn integer_kernel_basis(&self) -> Vec<Vec<Int>> {
        exactla::integer_kernel_basis(&self.matrix)
    }

    pub fn contains_in_kernel(&self, v: &[Int]) -> bool {
        v.len() == self.cols() && self.matrix.kills(v)
    }
}

/// Primitive integer `g` with `g . a_j > 0` for all columns `a_j`, if one
/// exists. By Gordan's alternative this is exactly pointedness of the
/// configuration.
pub fn positive_grading(matrix: &IntMatrix) -> Option<Vec<Int>> {
    let rows: Vec<Vec<Rat>> = (0..matrix.cols())
        .map(|j| matrix.col(j).into_iter().map(Rat::from).collect())
        .collect();
    let witness = fm::solve_strict_positive(&rows)?;
    let g = exactla::primitive_int_vector(&witness);
    debug_assert!((0..matrix.cols()).all(|j| dot(&g, &matrix.col(j)).is_positive()));
    Some(g)
}

/// Does `ker_Z(A)` meet the nonnegative orthant only in the origin?
pub fn check_pointed(matrix: &IntMatrix) -> bool {
    positive_grading(matrix).is_some()
}

fn dot(a: &[Int], b: &[Int]) -> Int {
    a.iter()
        .zip(b)
        .map(|(x, y)| x * y)
        .fold(Int::zero(), |acc, t| acc + t)
}

/// All nonnegative integer `v` with `A v = b`, sorted lexicographically.
/// Finiteness is guaranteed by pointedness: the grading weight of `b`
/// bounds every coordinate.
pub fn fiber(config: &Configuration, b: &[Int], budget: &Budget) -> Result<Vec<Vec<Int>>, Error> {
    if b.len() != config.rows() {
        return Err(Error::DimensionMismatch {
            expected: config.rows(),
            got: b.len(),
        });
    }
    let n = config.cols();
    let mut out = Vec::new();
    let mut v = vec![Int::zero(); n];
    let mut residual = b.to_vec();
    fiber_rec(config, 0, &mut v, &mut residual, &mut out, budget)?;
    out.sort();
    Ok(out)
}

fn fiber_rec(
    config: &Configuration,
    j: usize,
    v: &mut Vec<Int>,
    residual: &mut Vec<Int>,
    out: &mut Vec<Vec<Int>>,
    budget: &Budget,
) -> Result<(), Error> {
    budget.charge(1, "fiber")?;
    let weight = config.weight(residual);
    if weight.is_negative() {
        return Ok(());
    }
    if j == config.cols() {
        if residual.iter().all(|c| c.is_zero()) {
            out.push(v.clone());
        }
        return Ok(());
    }
    let col = config.matrix().col(j);
    let col_weight = dot(config.grading(), &col);
    let max = weight / &col_weight;
    let mut k = Int::zero();
    while k <= max {
        v[j] = k.clone();
        fiber_rec(config, j + 1, v, residual, out, budget)?;
        for (r, c) in residual.iter_mut().zip(&col) {
            *r = &*r - c;
        }
        k += 1;
    }
    // Restore the residual for the caller.
    for (r, c) in residual.iter_mut().zip(&col) {
        *r = &*r + &(c * &k);
    }
    v[j] = Int::zero();
    Ok(())
}

/// The fiber through a known nonnegative point `v0`: all nonnegative
/// `v0 + x_1 k_1 + ... + x_m k_m` over an integer kernel basis, found by
/// enumerating the lattice points of the polytope `{x : v0 + K x >= 0}`
/// level by level with Fourier-Motzkin bounds. Pointedness makes the
/// polytope bounded. Much faster than the coordinate search of `fiber`
/// when the kernel dimension is small.
pub fn fiber_from_point(
    config: &Configuration,
    v0: &[Int],
    budget: &Budget,
) -> Result<Vec<Vec<Int>>, Error> {
    let n = config.cols();
    if v0.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: v0.len(),
        });
    }
    if v0.iter().any(|c| c.is_negative()) {
        return Err(Error::InvalidSupport);
    }
    let basis = config.integer_kernel_basis();
    let k = basis.len();
    if k == 0 {
        return Ok(vec![v0.to_vec()]);
    }
    // Coordinate i of v reads v0[i] + sum_j basis[j][i] x_j >= 0, i.e.
    // sum_j (-basis[j][i]) x_j <= v0[i].
    let full: Vec<(Vec<Rat>, Rat)> = (0..n)
        .map(|i| {
            let coeffs: Vec<Rat> = basis.iter().map(|b| Rat::from(-b[i].clone())).collect();
            (coeffs, Rat::from(v0[i].clone()))
        })
        .collect();
    let mut systems = vec![full];
    for _ in 1..k {
        let projected = fm::project_last_leq(systems.last().unwrap());
        systems.push(projected);
    }
    systems.reverse();
    let mut out = Vec::new();
    let mut x: Vec<Int> = Vec::with_capacity(k);
    fiber_polytope_rec(v0, &basis, &systems, &mut x, &mut out, budget)?;
    out.sort();
    Ok(out)
}

fn fiber_polytope_rec(
    v0: &[Int],
    basis: &[Vec<Int>],
    systems: &[Vec<(Vec<Rat>, Rat)>],
    x: &mut Vec<Int>,
    out: &mut Vec<Vec<Int>>,
    budget: &Budget,
) -> Result<(), Error> {
    budget.charge(1, "fiber")?;
    let t = x.len();
    if t == basis.len() {
        let v: Vec<Int> = (0..v0.len())
            .map(|i| {
                let mut c = v0[i].clone();
                for (xj, b) in x.iter().zip(basis) {
                    c += xj * &b[i];
                }
                c
            })
            .collect();
        debug_assert!(v.iter().all(|c| !c.is_negative()));
        out.push(v);
        return Ok(());
    }
    // Bounds on x_t from the level-t system; rows with zero coefficient
    // on x_t are already enforced by the projected lower levels.
    let mut lo: Option<Rat> = None;
    let mut hi: Option<Rat> = None;
    for (a, c) in &systems[t] {
        let coeff = &a[t];
        if coeff.is_zero() {
            continue;
        }
        let mut slack = c.clone();
        for (xj, aj) in x.iter().zip(a) {
            slack -= aj * Rat::from(xj.clone());
        }
        let bound = slack / coeff;
        if coeff.is_positive() {
            hi = Some(match hi {
                Some(b) if b <= bound => b,
                _ => bound,
            });
        } else {
            lo = Some(match lo {
                Some(b) if b >= bound => b,
                _ => bound,
            });
        }
    }
    let (lo, hi) = match (lo, hi) {
        (Some(l), Some(h)) => (l.ceil().to_integer(), h.floor().to_integer()),
        // An unbounded direction contradicts pointedness.
        _ => return Err(Error::NotPointed),
    };
    let mut v = lo;
    while v <= hi {
        x.push(v.clone());
        fiber_polytope_rec(v0, basis, systems, x, out, budget)?;
        x.pop();
        v += 1;
    }
    Ok(())
}

/// Is `g` conformal to `v` and componentwise no larger in magnitude?
/// Conformal means no coordinate of `g` opposes the sign of `v` there.
fn reduces(g: &[Int], v: &[Int]) -> bool {
    let mut nonzero = false;
    for (gi, vi) in g.iter().zip(v) {
        if gi.is_zero() {
            continue;
        }
        nonzero = true;
        if gi.is_positive() {
            if vi < gi {
                return false;
            }
        } else if vi > gi {
            return false;
        }
    }
    nonzero
}

/// The Graver basis of `A`: all primitive kernel vectors that admit no
/// conformal decomposition, in canonical sign, sorted. Computed by
/// conformal completion from a lattice basis.
pub fn graver_basis(config: &Configuration, budget: &Budget) -> Result<Vec<LatticeVector>, Error> {
    graver_from_lattice_basis(&config.integer_kernel_basis(), budget)
}

/// Conformal (Pottier) completion starting from any lattice basis of the
/// kernel. The working set holds both signs of every vector; canonical
/// representatives are extracted at the end.
pub fn graver_from_lattice_basis(
    basis: &[Vec<Int>],
    budget: &Budget,
) -> Result<Vec<LatticeVector>, Error> {
    if basis.is_empty() {
        return Ok(Vec::new());
    }
    let mut g: Vec<Vec<Int>> = Vec::new();
    for b in basis {
        if b.iter().any(|c| !c.is_zero()) {
            g.push(b.clone());
            g.push(b.iter().map(|c| -c.clone()).collect());
        }
    }
    let mut queue: VecDeque<(usize, usize)> = VecDeque::new();
    for i in 0..g.len() {
        for j in i + 1..g.len() {
            queue.push_back((i, j));
        }
    }
    while let Some((i, j)) = queue.pop_front() {
        budget.charge(1, "graver")?;
        let sum: Vec<Int> = g[i].iter().zip(&g[j]).map(|(a, b)| a + b).collect();
        let reduced = normal_form(sum, &g, budget)?;
        if reduced.iter().any(|c| !c.is_zero()) {
            let neg: Vec<Int> = reduced.iter().map(|c| -c.clone()).collect();
            let idx = g.len();
            g.push(reduced);
            g.push(neg);
            for k in 0..idx {
                queue.push_back((k, idx));
                queue.push_back((k, idx + 1));
            }
            queue.push_back((idx, idx + 1));
        }
    }
    // Minimality pass: drop vectors conformally reducible by another
    // element of the set.
    let mut keep: Vec<Vec<Int>> = Vec::new();
    for (i, v) in g.iter().enumerate() {
        let reducible = g
            .iter()
            .enumerate()
            .any(|(j, w)| j != i && w != v && reduces(w, v));
        if !reducible {
            keep.push(v.clone());
        }
    }
    let mut out: Vec<LatticeVector> = keep
        .into_iter()
        .map(|v| LatticeVector::new(v).expect("nonzero Graver element"))
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// Reduce `v` against the set until no element is conformal to it.
fn normal_form(mut v: Vec<Int>, g: &[Vec<Int>], budget: &Budget) -> Result<Vec<Int>, Error> {
    'outer: loop {
        if v.iter().all(|c| c.is_zero()) {
            return Ok(v);
        }
        for w in g {
            if reduces(w, &v) {
                budget.charge(1, "graver")?;
                for (vi, wi) in v.iter_mut().zip(w) {
                    *vi = &*vi - wi;
                }
                continue 'outer;
            }
        }
        return Ok(v);
    }
}

/// Per-degree record of the minimal generator computation.
#[derive(Clone, Debug)]
pub struct DegreeInfo {
    pub degree: ADegree,
    pub fiber_size: usize,
    pub components: usize,
    pub added: Vec<LatticeVector>,
    /// True exactly when the fiber is two singletons: the generator in
    /// this degree appears in every binomial generating set.
    pub indispensable: bool,
}

#[derive(Clone, Debug)]
pub struct MarkovResult {
    pub generators: GeneratorSet,
    pub degrees: Vec<DegreeInfo>,
}

impl MarkovResult {
    pub fn mu(&self) -> usize {
        self.generators.len()
    }

    pub fn indispensable_count(&self) -> usize {
        self.degrees
            .iter()
            .filter(|d| d.indispensable)
            .map(|d| d.added.len())
            .sum()
    }
}

/// A minimal Markov basis: for each candidate multidegree, taken in
/// increasing grading weight, connect the fiber using already-chosen
/// moves and bridge the remaining components. Candidate degrees are the
/// Graver degrees; minimal generators live only there.
pub fn minimal_markov(config: &Configuration, budget: &Budget) -> Result<MarkovResult, Error> {
    let graver = graver_basis(config, budget)?;
    minimal_markov_from_graver(config, &graver, budget)
}

pub fn minimal_markov_from_graver(
    config: &Configuration,
    graver: &[LatticeVector],
    budget: &Budget,
) -> Result<MarkovResult, Error> {
    let mut degrees: Vec<(ADegree, Vec<Int>)> = graver
        .iter()
        .map(|u| (config.degree_of(u), u.plus()))
        .collect();
    degrees.sort();
    degrees.dedup_by(|a, b| a.0 == b.0);

    let mut chosen: Vec<Vec<Int>> = Vec::new();
    let mut infos: Vec<DegreeInfo> = Vec::new();
    for (degree, point) in degrees {
        let fib = fiber_from_point(config, &point, budget)?;
        let comps = fiber_components(&fib, &chosen, budget)?;
        let mut added = Vec::new();
        if comps.len() > 1 {
            // Bridge every component to the lex-first one.
            let anchor = comps[0][0].clone();
            for comp in &comps[1..] {
                let diff: Vec<Int> = comp[0].iter().zip(&anchor).map(|(a, b)| a - b).collect();
                let v = LatticeVector::new(diff).expect("distinct fiber elements");
                chosen.push(v.coords().to_vec());
                added.push(v);
            }
        }
        let indispensable =
            comps.len() == 2 && comps.iter().all(|c| c.len() == 1) && added.len() == 1;
        if !added.is_empty() {
            infos.push(DegreeInfo {
                degree,
                fiber_size: fib.len(),
                components: comps.len(),
                added,
                indispensable,
            });
        }
    }
    let vectors: Vec<LatticeVector> = infos.iter().flat_map(|i| i.added.clone()).collect();
    Ok(MarkovResult {
        generators: GeneratorSet::new(
            vectors,
            GeneratorMode::MinimalGenerators,
            "fiber connectivity",
        ),
        degrees: infos,
    })
}

/// Connected components of a fiber under the moves `±m` for the given
/// vectors, each component sorted, components ordered by first element.
fn fiber_components(
    fib: &[Vec<Int>],
    moves: &[Vec<Int>],
    budget: &Budget,
) -> Result<Vec<Vec<Vec<Int>>>, Error> {
    let index: HashMap<&Vec<Int>, usize> = fib.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let mut seen = vec![false; fib.len()];
    let mut comps = Vec::new();
    for start in 0..fib.len() {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(i) = stack.pop() {
            budget.charge(1, "markov")?;
            for m in moves {
                for sign in [1i8, -1] {
                    let next: Vec<Int> = fib[i]
                        .iter()
                        .zip(m)
                        .map(|(a, b)| if sign == 1 { a + b } else { a - b })
                        .collect();
                    if next.iter().any(|c| c.is_negative()) {
                        continue;
                    }
                    if let Some(&j) = index.get(&next) {
                        if !seen[j] {
                            seen[j] = true;
                            comp.push(j);
                            stack.push(j);
                        }
                    }
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp.into_iter().map(|i| fib[i].clone()).collect::<Vec<_>>());
    }
    comps.sort();
    Ok(comps)
}

/// Minimal number of binomial generators of the toric ideal.
pub fn mu(config: &Configuration, budget: &Budget) -> Result<usize, Error> {
    Ok(minimal_markov(config, budget)?.mu())
}

/// Indices (into the sorted generator list) of indispensable generators.
pub fn indispensable_set(result: &MarkovResult) -> HashSet<LatticeVector> {
    result
        .degrees
        .iter()
        .filter(|d| d.indispensable)
        .flat_map(|d| d.added.iter().cloned())
        .collect()
}
