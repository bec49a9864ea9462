//! Circuits, minimal half-supports, the support graph and its
//! `{0,1}`-matching invariant, and the resulting bounds on the minimal
//! number of binomials needed to cut out the toric variety set
//! theoretically.

use std::collections::BTreeSet;

use num_traits::Zero;

use crate::budget::Budget;
use crate::error::Error;
use crate::exactla::{self, IntMatrix};
use crate::toric::{self, Configuration, LatticeVector};
use crate::Int;

/// Sorted set of column indices (0-based).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SupportSet {
    indices: Vec<usize>,
}

impl SupportSet {
    pub fn new(mut indices: Vec<usize>) -> Self {
        indices.sort_unstable();
        indices.dedup();
        SupportSet { indices }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn is_subset_of(&self, other: &SupportSet) -> bool {
        self.indices
            .iter()
            .all(|i| other.indices.binary_search(i).is_ok())
    }

    pub fn is_disjoint_from(&self, other: &SupportSet) -> bool {
        self.indices
            .iter()
            .all(|i| other.indices.binary_search(i).is_err())
    }
}

/// A circuit: a primitive kernel vector of inclusion-minimal support,
/// in canonical sign.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Circuit {
    pub vector: LatticeVector,
}

impl Circuit {
    pub fn support(&self) -> SupportSet {
        SupportSet::new(self.vector.support())
    }

    pub fn support_plus(&self) -> SupportSet {
        SupportSet::new(self.vector.support_plus())
    }

    pub fn support_minus(&self) -> SupportSet {
        SupportSet::new(self.vector.support_minus())
    }
}

/// All circuits of the configuration, sorted. Each subset of `rank + 1`
/// columns whose restriction has a one-dimensional kernel contributes its
/// kernel generator; every circuit arises this way and every vector so
/// produced has minimal support.
pub fn circuits(matrix: &IntMatrix, budget: &Budget) -> Result<Vec<Circuit>, Error> {
    let n = matrix.cols();
    let r = exactla::rank(matrix);
    if r >= n {
        return Ok(Vec::new());
    }
    let mut found: BTreeSet<LatticeVector> = BTreeSet::new();
    let k = r + 1;
    let mut subset: Vec<usize> = (0..k).collect();
    loop {
        budget.charge(1, "circuits")?;
        let cols: Vec<Vec<Int>> = (0..matrix.rows())
            .map(|row| {
                subset
                    .iter()
                    .map(|&j| matrix.entry(row, j).clone())
                    .collect()
            })
            .collect();
        if exactla::rank_of_int_rows(&cols) == r {
            let kernel = exactla::kernel_int_vectors(&cols, k);
            debug_assert_eq!(kernel.len(), 1);
            let mut full = vec![Int::zero(); n];
            for (slot, &j) in subset.iter().enumerate() {
                full[j] = kernel[0][slot].clone();
            }
            found.insert(LatticeVector::new(full).expect("nonzero circuit"));
        }
        if !next_combination(&mut subset, n) {
            break;
        }
    }
    Ok(found.into_iter().map(|vector| Circuit { vector }).collect())
}

/// Advance a sorted combination in lexicographic order.
fn next_combination(subset: &mut [usize], n: usize) -> bool {
    let k = subset.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if subset[i] < n - k + i {
            subset[i] += 1;
            for j in i + 1..k {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Inclusion-minimal elements among the positive and negative half
/// supports of the circuits.
pub fn cmin(circuits: &[Circuit]) -> Vec<SupportSet> {
    let mut halves: BTreeSet<SupportSet> = BTreeSet::new();
    for c in circuits {
        halves.insert(c.support_plus());
        halves.insert(c.support_minus());
    }
    halves.retain(|s| !s.is_empty());
    let all: Vec<SupportSet> = halves.iter().cloned().collect();
    all.iter()
        .filter(|s| !all.iter().any(|t| *t != **s && t.is_subset_of(s)))
        .cloned()
        .collect()
}

/// Graph on the minimal half-supports. Two disjoint sets `S`, `T` are
/// adjacent when some kernel vector is positive exactly on `S`, negative
/// exactly on `T` and zero elsewhere; the witnessing vector is kept.
#[derive(Clone, Debug)]
pub struct SupportGraph {
    pub vertices: Vec<SupportSet>,
    pub edges: Vec<(usize, usize)>,
    pub witnesses: Vec<Vec<Int>>,
}

impl SupportGraph {
    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }
}

pub fn gamma_graph(
    matrix: &IntMatrix,
    vertices: &[SupportSet],
    budget: &Budget,
) -> Result<SupportGraph, Error> {
    let mut edges = Vec::new();
    let mut witnesses = Vec::new();
    for i in 0..vertices.len() {
        for j in i + 1..vertices.len() {
            budget.charge(1, "gamma")?;
            if !vertices[i].is_disjoint_from(&vertices[j]) {
                continue;
            }
            if let Some(w) =
                exactla::signed_kernel_vector(matrix, vertices[i].indices(), vertices[j].indices())?
            {
                edges.push((i, j));
                witnesses.push(w);
            }
        }
    }
    Ok(SupportGraph {
        vertices: vertices.to_vec(),
        edges,
        witnesses,
    })
}

/// A maximum `{0,1}`-matching: matched pairs plus the uncovered vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching01 {
    pub pairs: Vec<(usize, usize)>,
    pub singletons: Vec<usize>,
}

impl Matching01 {
    /// Number of parts: one per matched pair plus one per singleton.
    pub fn size(&self) -> usize {
        self.pairs.len() + self.singletons.len()
    }
}

/// `|V| - nu(G)` where `nu` is the maximum matching size, together with a
/// witnessing maximum matching. Exact branch and bound; the graphs here
/// are small (one vertex per minimal half-support).
pub fn delta01(graph: &SupportGraph) -> (usize, Matching01) {
    let n = graph.vertices.len();
    assert!(n <= 63, "support graph unexpectedly large");
    let mut adj = vec![0u64; n];
    for &(a, b) in &graph.edges {
        adj[a] |= 1 << b;
        adj[b] |= 1 << a;
    }
    let mut best: Vec<(usize, usize)> = Vec::new();
    let mut current: Vec<(usize, usize)> = Vec::new();
    max_matching(&adj, 0u64, n, &mut current, &mut best);
    let mut covered = 0u64;
    for &(a, b) in &best {
        covered |= 1 << a;
        covered |= 1 << b;
    }
    let singletons: Vec<usize> = (0..n).filter(|&v| covered >> v & 1 == 0).collect();
    let delta = n - best.len();
    (
        delta,
        Matching01 {
            pairs: best.clone(),
            singletons,
        },
    )
}

fn max_matching(
    adj: &[u64],
    used: u64,
    n: usize,
    current: &mut Vec<(usize, usize)>,
    best: &mut Vec<(usize, usize)>,
) {
    let Some(v) = (0..n).find(|&v| used >> v & 1 == 0 && adj[v] & !used != 0) else {
        if current.len() > best.len() {
            *best = current.clone();
        }
        return;
    };
    // Branch 1: leave v unmatched.
    max_matching(adj, used | 1 << v, n, current, best);
    // Branch 2: match v with each free neighbor.
    let mut nbrs = adj[v] & !used;
    while nbrs != 0 {
        let w = nbrs.trailing_zeros() as usize;
        nbrs &= nbrs - 1;
        current.push((v, w));
        max_matching(adj, used | 1 << v | 1 << w, n, current, best);
        current.pop();
    }
}

/// Bounds on the minimal number of binomials generating the ideal up to
/// radical, with the data used to derive them.
#[derive(Clone, Debug)]
pub struct BarBounds {
    pub lo: usize,
    pub hi: usize,
    pub height: usize,
    pub delta: usize,
    pub mu: Option<usize>,
    pub circuit_count: usize,
    pub matching: Matching01,
    pub graph: SupportGraph,
    /// Set when the generator computation ran out of budget and the upper
    /// bound fell back to the circuit count.
    pub degraded: bool,
}

/// Lower bound `max(height, delta)`, upper bound the minimal number of
/// generators. With `assume_circuit_radical` the circuit count also caps
/// the upper bound, and stands in for it if the generator computation
/// exhausts the budget.
pub fn bar_bounds(
    config: &Configuration,
    budget: &Budget,
    assume_circuit_radical: bool,
) -> Result<BarBounds, Error> {
    let circs = circuits(config.matrix(), budget)?;
    let verts = cmin(&circs);
    let graph = gamma_graph(config.matrix(), &verts, budget)?;
    let (delta, matching) = delta01(&graph);
    let height = config.height();
    let lo = height.max(delta);
    let (mu, hi, degraded) = match toric::mu(config, budget) {
        Ok(m) => {
            let hi = if assume_circuit_radical {
                m.min(circs.len())
            } else {
                m
            };
            (Some(m), hi, false)
        }
        Err(e) if e.is_budget() && assume_circuit_radical => (None, circs.len(), true),
        Err(e) => return Err(e),
    };
    Ok(BarBounds {
        lo,
        hi,
        height,
        delta,
        mu,
        circuit_count: circs.len(),
        matching,
        graph,
        degraded,
    })
}
