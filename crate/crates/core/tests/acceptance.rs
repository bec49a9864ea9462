//! Acceptance suite: one test per criterion, each printing a single
//! pass/fail line. Criteria whose recorded values are contradicted by
//! direct computation assert the computed state and say so on their
//! line; see NOTES.md for the analysis.

use std::collections::HashSet;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use toricsplit::budget::Budget;
use toricsplit::exactla::{self, IntMatrix};
use toricsplit::graphs::{self, BipartiteGraph};
use toricsplit::toric::{Configuration, LatticeVector};
use toricsplit::{families, splitting, supports, verify, Int, Rat};

fn assert_all_pass(criterion: usize, checks: &[verify::Check]) {
    for c in checks {
        assert!(
            c.pass,
            "criterion {criterion}: fail at {}: {}",
            c.name, c.detail
        );
    }
    println!("criterion {criterion}: pass ({} checks)", checks.len());
}

#[test]
fn criterion_01_simplicial_example() {
    let budget = Budget::default();
    let checks = verify::check_simplicial_example(&budget).unwrap();
    assert_all_pass(1, &checks);
}

/// The recorded support-graph data for this example is refuted by
/// explicit circuit witnesses, so three of the recorded comparisons
/// fail by design; everything else must pass. The criterion as stated
/// is therefore not met, and this test pins the documented state.
#[test]
fn criterion_02_nonsimplicial_example_documented_discrepancy() {
    let budget = Budget::default();
    let checks = verify::check_nonsimplicial_example(&budget).unwrap();
    let disputed = [
        "ex4_5 gamma edges",
        "ex4_5 delta01",
        "ex4_5 bar lower bound",
    ];
    for c in &checks {
        if disputed.contains(&c.name.as_str()) {
            assert!(
                !c.pass,
                "criterion 2: {} unexpectedly matches the recorded value",
                c.name
            );
        } else {
            assert!(c.pass, "criterion 2: fail at {}: {}", c.name, c.detail);
        }
    }
    // The refuting witnesses, asserted directly: both are circuits and
    // their signed supports join {3} and {5} to {1,2,4} (1-based).
    let inst = families::catalogued_example("ex4_5").unwrap();
    for (w, plus, minus) in [
        (vec![15, 79, -179, 12, 0], vec![0usize, 1, 3], vec![2usize]),
        (vec![81, 534, 0, 29, -537], vec![0, 1, 3], vec![4]),
    ] {
        let v = LatticeVector::from_i64(&w).unwrap();
        assert!(inst.config.contains_in_kernel(v.coords()));
        assert_eq!(v.support_plus(), plus);
        assert_eq!(v.support_minus(), minus);
    }
    println!(
        "criterion 2: fail as stated (gamma edges 2, delta01 2, bar lower 2; \
         recorded 0/3/3 refuted by circuit witnesses, see NOTES.md); \
         mu, generators and cmin pass"
    );
}

/// The curve's defining data requires gcd(a, b) = 1 (a + b = d with
/// gcd(a, b, d) = 1), so the sweep runs over coprime pairs. A
/// non-coprime pair genuinely breaks the recorded formulas, asserted
/// below for (2, 4).
#[test]
fn criterion_03_symmetric_curves() {
    let budget = Budget::default();
    let checks = verify::check_symmetric_curves(&budget).unwrap();
    for c in &checks {
        assert!(c.pass, "criterion 3: fail at {}: {}", c.name, c.detail);
    }
    let inst = families::symmetric_curve(2, 4).unwrap();
    assert_eq!(inst.warnings.len(), 1);
    let mu = toricsplit::toric::mu(&inst.config, &budget).unwrap();
    assert_eq!(mu, 3, "(2,4) has mu 3, not b-a+2 = 4");
    println!(
        "criterion 3: pass ({} checks over the 11 coprime pairs; gcd > 1 pairs \
         are outside the curve family and refute the formulas, see NOTES.md)",
        checks.len()
    );
}

#[test]
fn criterion_04_lawrence_lifting() {
    let budget = Budget::default();
    let checks = verify::check_lawrence(&budget).unwrap();
    assert_all_pass(4, &checks);
}

#[test]
fn criterion_05_complete_bipartite_k33() {
    let budget = Budget::default();
    let checks = verify::check_k33(&budget).unwrap();
    assert_all_pass(5, &checks);
}

#[test]
fn criterion_06_cyclic_configurations() {
    let budget = Budget::default();
    let checks = verify::check_cyclic(&budget).unwrap();
    assert_all_pass(6, &checks);
}

#[test]
fn criterion_07_height7_certificates() {
    let budget = Budget::default();
    let checks = verify::check_height7_example(&budget).unwrap();
    assert_all_pass(7, &checks);
}

/// Integer kernel vectors of `m` with sup-norm at most `bound`,
/// enumerated over the free coordinates of the reduced row echelon
/// form, in canonical sign. Exact i128 arithmetic throughout.
#[allow(clippy::needless_range_loop)]
fn kernel_box(m: &IntMatrix, bound: i64) -> Vec<Vec<i128>> {
    let n = m.cols();
    let rat_rows: Vec<Vec<Rat>> = m
        .row_vecs()
        .iter()
        .map(|r| r.iter().map(|c| Rat::from(c.clone())).collect())
        .collect();
    let (_, pivots) = exactla::rref(rat_rows.clone());
    let free: Vec<usize> = (0..n).filter(|j| !pivots.contains(j)).collect();
    let k = free.len();
    if k == 0 {
        return Vec::new();
    }
    // One primitive integer basis vector per free coordinate, positive
    // there and zero on the other free coordinates.
    let (rref_rows, _) = exactla::rref(rat_rows);
    let mut basis: Vec<Vec<i128>> = Vec::new();
    let mut diag: Vec<i128> = Vec::new();
    for &f in &free {
        let mut v = vec![Rat::from(Int::from(0)); n];
        v[f] = Rat::from(Int::from(1));
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = -rref_rows[i][f].clone();
        }
        let mut b: Vec<i128> = exactla::primitive_int_vector(&v)
            .iter()
            .map(|c| i128::try_from(c).expect("small entries"))
            .collect();
        if b[f] < 0 {
            for c in b.iter_mut() {
                *c = -*c;
            }
        }
        diag.push(b[f]);
        basis.push(b);
    }
    let lcm = diag.iter().fold(1i128, |acc, &d| num_integer::lcm(acc, d));
    let scale: Vec<i128> = diag.iter().map(|&d| lcm / d).collect();
    let mut out: HashSet<Vec<i128>> = HashSet::new();
    let mut y = vec![0i64; k];
    loop {
        if y.iter().any(|&c| c != 0) {
            let mut v = Vec::with_capacity(n);
            let mut ok = true;
            for j in 0..n {
                let w: i128 = (0..k).map(|i| y[i] as i128 * basis[i][j] * scale[i]).sum();
                if w % lcm != 0 || (w / lcm).abs() > bound as i128 {
                    ok = false;
                    break;
                }
                v.push(w / lcm);
            }
            if ok {
                if v.iter().find(|&&c| c != 0).is_some_and(|&c| c < 0) {
                    for c in v.iter_mut() {
                        *c = -*c;
                    }
                }
                out.insert(v);
            }
        }
        // Odometer over [-bound, bound]^k.
        let mut i = 0;
        loop {
            if i == k {
                let mut sorted: Vec<Vec<i128>> = out.into_iter().collect();
                sorted.sort();
                return sorted;
            }
            if y[i] < bound {
                y[i] += 1;
                break;
            }
            y[i] = -bound;
            i += 1;
        }
    }
}

/// Is `u` (or `-u`) conformal to `v` and componentwise no larger, with
/// `u` distinct from `v`?
fn conformally_reduces(u: &[i128], v: &[i128]) -> bool {
    if u == v {
        return false;
    }
    let fits = |sign: i128| {
        u.iter().zip(v).all(|(&ui, &vi)| {
            let ui = sign * ui;
            ui == 0 || (ui.signum() == vi.signum() && ui.abs() <= vi.abs())
        })
    };
    fits(1) || (fits(-1) && u.iter().map(|&c| -c).ne(v.iter().copied()))
}

#[test]
fn criterion_08_random_configuration_oracles() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let budget = Budget::new(u64::MAX);
    let bound = 20i64;
    let mut accepted = 0usize;
    let mut cover_cases = 0usize;
    let mut attempts = 0usize;
    while accepted < 100 {
        attempts += 1;
        assert!(attempts < 20_000, "criterion 8: sampling stalled");
        let m = rng.gen_range(1..=3usize);
        let n = rng.gen_range(2..=6usize);
        let rows: Vec<Vec<i64>> = (0..m)
            .map(|_| (0..n).map(|_| rng.gen_range(0..=5i64)).collect())
            .collect();
        let Ok(config) = Configuration::from_i64(&rows) else {
            continue;
        };
        // The box oracle is (2B+1)^k work; keep the kernel dimension at
        // desk scale.
        if config.height() > 3 {
            continue;
        }
        accepted += 1;

        let rank = exactla::rank(config.matrix());
        assert_eq!(rank + config.height(), n, "criterion 8: rank + kernel dim");

        let graver = toricsplit::toric::graver_basis(&config, &budget).unwrap();
        let graver_set: HashSet<&LatticeVector> = graver.iter().collect();

        // Brute-force oracle: the Graver elements inside the box are
        // exactly the conformally irreducible kernel vectors there.
        let points = kernel_box(config.matrix(), bound);
        let irreducible: Vec<Vec<i128>> = points
            .iter()
            .filter(|v| !points.iter().any(|u| conformally_reduces(u, v)))
            .cloned()
            .collect();
        let graver_in_box: Vec<Vec<i128>> = {
            let mut g: Vec<Vec<i128>> = graver
                .iter()
                .map(|v| {
                    v.coords()
                        .iter()
                        .map(|c| i128::try_from(c).unwrap())
                        .collect()
                })
                .filter(|v: &Vec<i128>| v.iter().all(|c| c.abs() <= bound as i128))
                .collect();
            g.sort();
            g
        };
        assert_eq!(
            graver_in_box, irreducible,
            "criterion 8: graver vs box oracle on {rows:?}"
        );

        let circs = supports::circuits(config.matrix(), &budget).unwrap();
        for c in &circs {
            assert!(
                graver_set.contains(&c.vector),
                "criterion 8: circuit outside graver"
            );
        }

        let markov =
            toricsplit::toric::minimal_markov_from_graver(&config, &graver, &budget).unwrap();
        for g in &markov.generators.vectors {
            assert!(
                graver_set.contains(g),
                "criterion 8: generator outside graver"
            );
        }

        let gens = &markov.generators;
        if (2..=10).contains(&gens.len()) {
            cover_cases += 1;
            let computed = splitting::find_cover(&config, gens, 2, &budget).unwrap();
            let kdim = config.height();
            let g = gens.len();
            let mut exists = false;
            for mask in 1u32..(1 << (g - 1)) {
                let (mut a, mut b): (Vec<Vec<Int>>, Vec<Vec<Int>>) = (Vec::new(), Vec::new());
                for (i, v) in gens.vectors.iter().enumerate() {
                    if i > 0 && mask >> (i - 1) & 1 == 1 {
                        b.push(v.coords().to_vec());
                    } else {
                        a.push(v.coords().to_vec());
                    }
                }
                if exactla::span_dimension_int(&a) < kdim && exactla::span_dimension_int(&b) < kdim
                {
                    exists = true;
                    break;
                }
            }
            assert_eq!(
                computed.is_some(),
                exists,
                "criterion 8: find_cover(2) vs bipartition oracle on {rows:?}"
            );
        }
    }
    println!(
        "criterion 8: pass ({accepted} pointed configurations, {cover_cases} cover comparisons)"
    );
}

#[test]
fn criterion_09_bipartite_cycle_oracle() {
    let budget = Budget::new(u64::MAX);
    let mut graphs_checked = 0usize;
    for m in 1..=4usize {
        for n in m..=8usize.min(9 - m) {
            let all_edges: Vec<(usize, usize)> =
                (0..m).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
            let e = all_edges.len();
            for mask in 1u32..(1 << e) {
                let count = mask.count_ones() as usize;
                if count > 8 || count + 1 < m + n {
                    continue;
                }
                let edges: Vec<(usize, usize)> = (0..e)
                    .filter(|&i| mask >> i & 1 == 1)
                    .map(|i| all_edges[i])
                    .collect();
                // Connectivity (which also covers every vertex) is part
                // of the constructor contract.
                let Ok(graph) = BipartiteGraph::new(m, n, edges) else {
                    continue;
                };
                graphs_checked += 1;
                let cycles = graphs::cycle_generators(&graph);
                let config = graphs::incidence_configuration(&graph);
                let markov = toricsplit::toric::minimal_markov(&config, &budget).unwrap();
                assert_eq!(
                    cycles.vectors, markov.generators.vectors,
                    "criterion 9: mismatch on K({m},{n}) mask {mask:#x}"
                );
            }
        }
    }
    assert!(
        graphs_checked > 10_000,
        "criterion 9: enumeration too small"
    );
    println!("criterion 9: pass ({graphs_checked} connected bipartite graphs)");
}
