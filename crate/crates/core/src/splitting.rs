//! Splittings of toric ideals: cover search over generator sets,
//! witness subconfigurations, splitting numbers and the catalogue of
//! sufficient conditions for radical splittability.

use num_traits::{Signed, Zero};

use crate::budget::Budget;
use crate::error::Error;
use crate::exactla::{self, IntMatrix, OrthogonalComplement};
use crate::supports;
use crate::toric::{self, Configuration, GeneratorMode, GeneratorSet};
use crate::{Int, Rat};

/// What a certificate claims: an ideal-sum splitting or only a splitting
/// of the radical.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SplitKind {
    Splitting,
    RadicalSplitting,
}

/// A cover of a generator set into parts with proper spans, together
/// with the witness configurations cutting out each part's span.
#[derive(Clone, Debug)]
pub struct SplitCertificate {
    /// Index subsets into the generator set, pairwise disjoint, covering.
    pub parts: Vec<Vec<usize>>,
    pub span_dims: Vec<usize>,
    pub kernel_dim: usize,
    pub witness_configs: Vec<IntMatrix>,
    pub kind: SplitKind,
}

impl SplitCertificate {
    pub fn r(&self) -> usize {
        self.parts.len()
    }
}

/// Incremental rational echelon basis used by the cover search: rows are
/// kept reduced so membership and dimension queries are O(rows).
#[derive(Clone, Debug, Default)]
struct Echelon {
    rows: Vec<Vec<Rat>>,
}

impl Echelon {
    fn dim(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &[Rat]) -> Vec<Rat> {
        let mut v = v.to_vec();
        for row in &self.rows {
            let lead = row.iter().position(|c| !c.is_zero()).unwrap();
            if !v[lead].is_zero() {
                let f = &v[lead] / &row[lead];
                for (vi, ri) in v.iter_mut().zip(row) {
                    let t = ri * &f;
                    *vi = &*vi - t;
                }
            }
        }
        v
    }

    /// Insert `v`; returns true when the dimension grew (pop to undo).
    fn push(&mut self, v: &[Rat]) -> bool {
        let r = self.reduce(v);
        if r.iter().all(|c| c.is_zero()) {
            false
        } else {
            self.rows.push(r);
            true
        }
    }

    fn pop(&mut self) {
        self.rows.pop();
    }
}

const COVER_SIZE_LIMIT: usize = 16;

/// Search for a partition of the generator set into `r` parts, each
/// spanning a proper subspace of the kernel. Searching partitions
/// suffices: removing duplicates from an overlapping cover only shrinks
/// spans. The first partition in restricted-growth order is returned,
/// which is the lexicographically least valid one.
pub fn find_cover(
    config: &Configuration,
    generators: &GeneratorSet,
    r: usize,
    budget: &Budget,
) -> Result<Option<SplitCertificate>, Error> {
    if r < 2 {
        return Err(Error::TooFewParts { got: r });
    }
    let n = generators.len();
    if n == 0 {
        return Err(Error::EmptyPart);
    }
    if n > COVER_SIZE_LIMIT {
        return Err(Error::BudgetExhausted {
            phase: "cover",
            limit: COVER_SIZE_LIMIT as u64,
        });
    }
    for v in &generators.vectors {
        if !config.contains_in_kernel(v.coords()) {
            return Err(Error::NotInKernel);
        }
    }
    if r > n {
        return Ok(None);
    }
    let kdim = config.height();
    let vectors: Vec<Vec<Rat>> = generators
        .vectors
        .iter()
        .map(|v| v.coords().iter().map(|c| Rat::from(c.clone())).collect())
        .collect();
    let mut assignment = vec![usize::MAX; n];
    let mut spans: Vec<Echelon> = vec![Echelon::default(); r];
    let found = cover_rec(&vectors, 0, 0, r, kdim, &mut assignment, &mut spans, budget)?;
    if !found {
        return Ok(None);
    }
    let parts: Vec<Vec<usize>> = (0..r)
        .map(|p| (0..n).filter(|&i| assignment[i] == p).collect())
        .collect();
    let cert = certify(config, generators, parts, SplitKind::Splitting)?;
    Ok(Some(cert))
}

#[allow(clippy::too_many_arguments)]
fn cover_rec(
    vectors: &[Vec<Rat>],
    i: usize,
    used: usize,
    r: usize,
    kdim: usize,
    assignment: &mut Vec<usize>,
    spans: &mut Vec<Echelon>,
    budget: &Budget,
) -> Result<bool, Error> {
    budget.charge(1, "cover")?;
    let n = vectors.len();
    if i == n {
        return Ok(used == r);
    }
    // Parts still unopened must each get one of the remaining vectors.
    if r - used > n - i {
        return Ok(false);
    }
    let limit = (used + 1).min(r);
    for p in 0..limit {
        let grew = spans[p].push(&vectors[i]);
        if !grew || spans[p].dim() < kdim {
            assignment[i] = p;
            let next_used = if p == used { used + 1 } else { used };
            if cover_rec(
                vectors,
                i + 1,
                next_used,
                r,
                kdim,
                assignment,
                spans,
                budget,
            )? {
                return Ok(true);
            }
            assignment[i] = usize::MAX;
        }
        if grew {
            spans[p].pop();
        }
    }
    Ok(false)
}

/// Witness configurations for the given parts, verified: each part is
/// nonempty, spans a proper subspace of the kernel, and the constructed
/// matrix has exactly that span as its rational kernel.
pub fn build_subconfigurations(
    config: &Configuration,
    generators: &GeneratorSet,
    parts: &[Vec<usize>],
) -> Result<(Vec<IntMatrix>, Vec<usize>), Error> {
    let n = config.cols();
    let kdim = config.height();
    let mut matrices = Vec::new();
    let mut span_dims = Vec::new();
    for (pi, part) in parts.iter().enumerate() {
        if part.is_empty() {
            return Err(Error::EmptyPart);
        }
        let vecs: Vec<Vec<Int>> = part
            .iter()
            .map(|&i| generators.vectors[i].coords().to_vec())
            .collect();
        let dim = exactla::span_dimension_int(&vecs);
        if dim >= kdim {
            return Err(Error::PartSpansKernel { part: pi });
        }
        let m = match exactla::orthogonal_complement(&vecs, n) {
            OrthogonalComplement::Matrix(m) => m,
            OrthogonalComplement::FullSpan => return Err(Error::PartSpansKernel { part: pi }),
        };
        // ker_Q(A_i) = span_Q(C_i): dimensions agree and one inclusion
        // holds by construction.
        debug_assert_eq!(n - exactla::rank(&m), dim);
        debug_assert!(vecs.iter().all(|v| m.kills(v)));
        matrices.push(m);
        span_dims.push(dim);
    }
    Ok((matrices, span_dims))
}

fn certify(
    config: &Configuration,
    generators: &GeneratorSet,
    parts: Vec<Vec<usize>>,
    kind: SplitKind,
) -> Result<SplitCertificate, Error> {
    let (witness_configs, span_dims) = build_subconfigurations(config, generators, &parts)?;
    let cert = SplitCertificate {
        parts,
        span_dims,
        kernel_dim: config.height(),
        witness_configs,
        kind,
    };
    debug_assert!(verify_certificate(config, generators, &cert));
    Ok(cert)
}

/// Independent check of a certificate, trusting nothing from the search:
/// the parts cover the index set, every span dimension is recomputed and
/// proper, and each witness matrix has the part's span as its kernel
/// (dimension count plus direct multiplication).
pub fn verify_certificate(
    config: &Configuration,
    generators: &GeneratorSet,
    cert: &SplitCertificate,
) -> bool {
    let n = generators.len();
    let mut seen = vec![false; n];
    for part in &cert.parts {
        for &i in part {
            if i >= n {
                return false;
            }
            seen[i] = true;
        }
    }
    if seen.iter().any(|s| !s) {
        return false;
    }
    if cert.kernel_dim != config.height() {
        return false;
    }
    if cert.parts.len() != cert.span_dims.len() || cert.parts.len() != cert.witness_configs.len() {
        return false;
    }
    for ((part, &dim), witness) in cert
        .parts
        .iter()
        .zip(&cert.span_dims)
        .zip(&cert.witness_configs)
    {
        if part.is_empty() {
            return false;
        }
        let vecs: Vec<Vec<Int>> = part
            .iter()
            .map(|&i| generators.vectors[i].coords().to_vec())
            .collect();
        if exactla::span_dimension_int(&vecs) != dim || dim >= cert.kernel_dim {
            return false;
        }
        if !vecs.iter().all(|v| witness.kills(v)) {
            return false;
        }
        if config.cols() - exactla::rank(witness) != dim {
            return false;
        }
    }
    true
}

/// An exact value, a closed interval, or a lower bound; NotApplicable
/// covers ideals that are zero or principal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SplitValue {
    Exact(usize),
    Interval(usize, usize),
    AtLeast(usize),
    NotApplicable,
}

impl SplitValue {
    pub fn exact(&self) -> Option<usize> {
        match self {
            SplitValue::Exact(v) => Some(*v),
            _ => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SplitReport {
    pub split: SplitValue,
    pub split_rad: SplitValue,
    pub method: String,
    pub certificate: Option<SplitCertificate>,
    /// The generator set the certificate parts index into, when one was
    /// computed along the way.
    pub generators: Option<GeneratorSet>,
}

/// Least `r` for which `find_cover` succeeds on the given set, with its
/// certificate.
fn min_cover(
    config: &Configuration,
    generators: &GeneratorSet,
    budget: &Budget,
) -> Result<Option<(usize, SplitCertificate)>, Error> {
    for r in 2..=generators.len() {
        if let Some(cert) = find_cover(config, generators, r, budget)? {
            return Ok(Some((r, cert)));
        }
    }
    Ok(None)
}

/// Compute or bound the splitting numbers. Exact answers come from the
/// height-2 rule or from cover search over a unique minimal generating
/// set; anything else is reported as bounds from one generating set.
pub fn split_numbers(
    config: &Configuration,
    budget: &Budget,
    assume_circuit_radical: bool,
) -> Result<SplitReport, Error> {
    if config.height() == 0 {
        return Ok(SplitReport {
            split: SplitValue::NotApplicable,
            split_rad: SplitValue::NotApplicable,
            method: "zero ideal".into(),
            certificate: None,
            generators: None,
        });
    }
    if config.height() == 1 {
        return Ok(SplitReport {
            split: SplitValue::NotApplicable,
            split_rad: SplitValue::NotApplicable,
            method: "principal ideal".into(),
            certificate: None,
            generators: None,
        });
    }
    if config.height() == 2 {
        let bar = supports::bar_bounds(config, budget, assume_circuit_radical)?;
        let mu = match bar.mu {
            Some(m) => m,
            None => {
                return Ok(SplitReport {
                    split: SplitValue::AtLeast(2),
                    split_rad: interval_or_exact(bar.lo, bar.hi),
                    method: "height-2 rule, generator count unavailable within budget".into(),
                    certificate: None,
                    generators: None,
                })
            }
        };
        // Each generator alone spans a line inside the 2-dimensional
        // kernel, so the singleton partition is always a valid cover.
        let markov = toric::minimal_markov(config, budget)?;
        let parts: Vec<Vec<usize>> = (0..markov.generators.len()).map(|i| vec![i]).collect();
        let cert = certify(config, &markov.generators, parts, SplitKind::Splitting)?;
        return Ok(SplitReport {
            split: SplitValue::Exact(mu),
            split_rad: interval_or_exact(bar.lo, bar.hi),
            method: "height-2 rule: splitting number equals the minimal number of generators"
                .into(),
            certificate: Some(cert),
            generators: Some(markov.generators),
        });
    }
    let markov = toric::minimal_markov(config, budget)?;
    let generators = markov.generators.clone();
    let unique = markov.indispensable_count() == markov.mu() && markov.mu() >= 1;
    let cover = if generators.len() <= COVER_SIZE_LIMIT {
        min_cover(config, &generators, budget)?
    } else {
        None
    };
    match cover {
        Some((r, cert)) if unique => {
            let radical_mode = generators.mode == GeneratorMode::RadicalGenerators;
            Ok(SplitReport {
                split: SplitValue::Exact(r),
                split_rad: if radical_mode {
                    SplitValue::Exact(r)
                } else {
                    SplitValue::Interval(2, r)
                },
                method: "cover search over the unique minimal generating set".into(),
                certificate: Some(cert),
                generators: Some(generators),
            })
        }
        Some((r, cert)) => Ok(SplitReport {
            split: SplitValue::Interval(2, r),
            split_rad: SplitValue::Interval(2, r),
            method: "upper bound from one minimal generating set".into(),
            certificate: Some(cert),
            generators: Some(generators),
        }),
        None => Ok(SplitReport {
            split: SplitValue::AtLeast(2),
            split_rad: SplitValue::AtLeast(2),
            method: "no cover found on one minimal generating set".into(),
            certificate: None,
            generators: Some(generators),
        }),
    }
}

fn interval_or_exact(lo: usize, hi: usize) -> SplitValue {
    if lo == hi {
        SplitValue::Exact(lo)
    } else {
        SplitValue::Interval(lo, hi)
    }
}

/// A sufficient condition from the catalogue, with the conclusion its
/// hypotheses license for this configuration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub name: &'static str,
    pub conclusion: String,
}

/// Simplicial shape: every coordinate direction carries a column that is
/// a positive multiple of a unit vector, and every remaining column is
/// nonnegative. Full parametrization additionally has all tail entries
/// nonzero.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    NotSimplicial,
    Simplicial,
    FullParametrization,
}

pub fn classify_shape(matrix: &IntMatrix) -> Shape {
    let m = matrix.rows();
    let n = matrix.cols();
    // Greedy matching of rows to unit-multiple columns; a column serves
    // one row only.
    let mut matched = vec![None; m];
    let mut used = vec![false; n];
    for i in 0..m {
        for (j, used_j) in used.iter_mut().enumerate() {
            if *used_j {
                continue;
            }
            let col = matrix.col(j);
            let unit =
                col[i].is_positive() && col.iter().enumerate().all(|(k, c)| k == i || c.is_zero());
            if unit {
                matched[i] = Some(j);
                *used_j = true;
                break;
            }
        }
    }
    if matched.iter().any(|c| c.is_none()) {
        return Shape::NotSimplicial;
    }
    let tails: Vec<usize> = (0..n).filter(|&j| !used[j]).collect();
    let all_nonneg = tails
        .iter()
        .all(|&j| matrix.col(j).iter().all(|c| !c.is_negative()));
    if !all_nonneg {
        return Shape::NotSimplicial;
    }
    let all_nonzero = tails
        .iter()
        .all(|&j| matrix.col(j).iter().all(|c| !c.is_zero()));
    if all_nonzero {
        Shape::FullParametrization
    } else {
        Shape::Simplicial
    }
}

/// Sufficient conditions for (radical) splittability that can be checked
/// from the configuration's shape, height and a known binomial
/// arithmetical rank.
pub fn classify_sufficient_conditions(
    config: &Configuration,
    known_bar: Option<usize>,
) -> Vec<Rule> {
    let mut rules = Vec::new();
    let ht = config.height();
    let shape = classify_shape(config.matrix());
    if shape != Shape::NotSimplicial && ht == 2 {
        rules.push(Rule {
            name: "simplicial-height-2",
            conclusion: "2 <= Split_rad <= 3".into(),
        });
    }
    if shape == Shape::FullParametrization && ht >= 3 {
        rules.push(Rule {
            name: "full-parametrization",
            conclusion: "radical splittable".into(),
        });
    }
    if let Some(bar) = known_bar {
        if ht >= 3 && bar <= 2 * ht - 2 {
            rules.push(Rule {
                name: "bar-at-most-2h-minus-2",
                conclusion: "radical splittable (Split_rad = 2)".into(),
            });
        }
        if ht >= 2 && bar == ht + 1 {
            rules.push(Rule {
                name: "bar-equals-height-plus-1",
                conclusion: "radical splittable".into(),
            });
        }
        if bar == ht {
            rules.push(Rule {
                name: "set-theoretic-complete-intersection",
                conclusion: "radical splittable".into(),
            });
        }
        if ht == 2 && bar == 2 {
            rules.push(Rule {
                name: "height-2-iff",
                conclusion: "radical splittable if and only if set-theoretic complete intersection; here bar = 2 so both hold".into(),
            });
        }
    }
    rules
}
