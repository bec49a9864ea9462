//! Fourier-Motzkin elimination for strict homogeneous systems `G x > 0`.
//!
//! Every inequality is of the form `g . x > 0` with rational coefficients.
//! Homogeneity is preserved by elimination, so the system is feasible
//! exactly when no all-zero row (the contradiction `0 > 0`) is ever
//! produced. On success a rational witness is reconstructed by
//! back-substitution, choosing midpoints between the surviving bounds.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

type Rat = BigRational;

/// Decide feasibility of `{x : row . x > 0 for every row}` and return a
/// witness if one exists. Rows of length zero are contradictions.
pub fn solve_strict_positive(rows: &[Vec<Rat>]) -> Option<Vec<Rat>> {
    if rows.is_empty() {
        return Some(Vec::new());
    }
    let nvars = rows[0].len();
    debug_assert!(rows.iter().all(|r| r.len() == nvars));
    solve(dedupe(rows.to_vec()), nvars)
}

fn solve(rows: Vec<Vec<Rat>>, nvars: usize) -> Option<Vec<Rat>> {
    // A row with no nonzero coefficient reads 0 > 0.
    if rows.iter().any(|r| r.iter().all(|c| c.is_zero())) {
        return None;
    }
    if nvars == 0 {
        return Some(Vec::new());
    }
    let v = nvars - 1;
    let mut lowers: Vec<Vec<Rat>> = Vec::new();
    let mut uppers: Vec<Vec<Rat>> = Vec::new();
    let mut rest: Vec<Vec<Rat>> = Vec::new();
    for r in rows {
        if r[v].is_positive() {
            lowers.push(r);
        } else if r[v].is_negative() {
            uppers.push(r);
        } else {
            rest.push(r);
        }
    }
    let mut next = rest.clone();
    for l in &lowers {
        for u in &uppers {
            // (-u[v]) * l + l[v] * u eliminates x_v and keeps strictness.
            let a = &l[v];
            let c = &u[v];
            let comb: Vec<Rat> = l
                .iter()
                .zip(u.iter())
                .map(|(li, ui)| li * (-c) + ui * a)
                .collect();
            debug_assert!(comb[v].is_zero());
            next.push(comb);
        }
    }
    let next = dedupe(next);
    let mut x = solve(next, v)?;
    // Back-substitute: bounds on x_v induced by the chosen x_0..x_{v-1}.
    let eval = |row: &[Rat], x: &[Rat]| -> Rat {
        row[..v]
            .iter()
            .zip(x.iter())
            .map(|(c, xi)| c * xi)
            .fold(Rat::zero(), |acc, t| acc + t)
    };
    let mut lo: Option<Rat> = None;
    for l in &lowers {
        let bound = -eval(l, &x) / &l[v];
        lo = Some(match lo {
            Some(b) if b >= bound => b,
            _ => bound,
        });
    }
    let mut hi: Option<Rat> = None;
    for u in &uppers {
        let bound = -eval(u, &x) / &u[v];
        hi = Some(match hi {
            Some(b) if b <= bound => b,
            _ => bound,
        });
    }
    let one = Rat::one();
    let value = match (lo, hi) {
        (Some(l), Some(h)) => {
            debug_assert!(l < h);
            (l + h) / (Rat::one() + Rat::one())
        }
        (Some(l), None) => l + one,
        (None, Some(h)) => h - one,
        (None, None) => Rat::zero(),
    };
    x.push(value);
    Some(x)
}

/// Scale each row to a canonical primitive integer form and drop duplicates.
fn dedupe(rows: Vec<Vec<Rat>>) -> Vec<Vec<Rat>> {
    let mut seen: HashSet<Vec<BigInt>> = HashSet::new();
    let mut out = Vec::new();
    for r in rows {
        let key = primitive_integer_form(&r);
        if seen.insert(key) {
            out.push(r);
        }
    }
    out
}

fn primitive_integer_form(row: &[Rat]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for c in row {
        lcm = num_integer::lcm(lcm, c.denom().clone());
    }
    let ints: Vec<BigInt> = row.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
    let mut gcd = BigInt::zero();
    for c in &ints {
        gcd = num_integer::gcd(gcd, c.abs());
    }
    if gcd.is_zero() {
        return ints;
    }
    ints.into_iter().map(|c| c / &gcd).collect()
}

/// Rows encode the non-strict system `a . x <= c`. Eliminate the last
/// variable, returning an equivalent system on one fewer variable.
/// Rows whose last coefficient is zero carry over truncated.
pub fn project_last_leq(rows: &[(Vec<Rat>, Rat)]) -> Vec<(Vec<Rat>, Rat)> {
    let nvars = rows.first().map_or(0, |(a, _)| a.len());
    debug_assert!(nvars > 0);
    let v = nvars - 1;
    let mut uppers: Vec<&(Vec<Rat>, Rat)> = Vec::new();
    let mut lowers: Vec<&(Vec<Rat>, Rat)> = Vec::new();
    let mut next: Vec<(Vec<Rat>, Rat)> = Vec::new();
    for row in rows {
        if row.0[v].is_positive() {
            uppers.push(row);
        } else if row.0[v].is_negative() {
            lowers.push(row);
        } else {
            next.push((row.0[..v].to_vec(), row.1.clone()));
        }
    }
    for (la, lc) in &lowers {
        for (ua, uc) in &uppers {
            // ua[v] * lower + (-la[v]) * upper eliminates x_v; both
            // multipliers are positive, so the direction is preserved.
            let p = &ua[v];
            let q = -&la[v];
            let comb: Vec<Rat> = la[..v]
                .iter()
                .zip(&ua[..v])
                .map(|(li, ui)| li * p + ui * &q)
                .collect();
            next.push((comb, lc * p + uc * &q));
        }
    }
    dedupe_leq(next)
}

fn dedupe_leq(rows: Vec<(Vec<Rat>, Rat)>) -> Vec<(Vec<Rat>, Rat)> {
    let mut seen: HashSet<Vec<BigInt>> = HashSet::new();
    let mut out = Vec::new();
    for (a, c) in rows {
        let mut packed = a.clone();
        packed.push(c.clone());
        if seen.insert(primitive_integer_form(&packed)) {
            out.push((a, c));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::FromPrimitive;

    fn rat(n: i64) -> Rat {
        Rat::from_i64(n).unwrap()
    }

    fn rows(data: &[&[i64]]) -> Vec<Vec<Rat>> {
        data.iter()
            .map(|r| r.iter().map(|&c| rat(c)).collect())
            .collect()
    }

    fn check_witness(sys: &[Vec<Rat>], x: &[Rat]) {
        for r in sys {
            let dot: Rat = r.iter().zip(x).map(|(c, xi)| c * xi).sum();
            assert!(dot.is_positive(), "row not strictly satisfied");
        }
    }

    #[test]
    fn single_variable() {
        let sys = rows(&[&[1]]);
        let x = solve_strict_positive(&sys).unwrap();
        check_witness(&sys, &x);
        assert!(solve_strict_positive(&rows(&[&[1], &[-1]])).is_none());
    }

    #[test]
    fn two_variables_cone() {
        let sys = rows(&[&[1, -1], &[-1, 2]]);
        let x = solve_strict_positive(&sys).unwrap();
        check_witness(&sys, &x);
    }

    #[test]
    fn infeasible_cycle() {
        // x > y, y > z, z > x has no solution.
        let sys = rows(&[&[1, -1, 0], &[0, 1, -1], &[-1, 0, 1]]);
        assert!(solve_strict_positive(&sys).is_none());
    }

    #[test]
    fn zero_row_is_contradiction() {
        assert!(solve_strict_positive(&rows(&[&[0, 0]])).is_none());
    }

    #[test]
    fn brute_force_agreement() {
        // Compare against a grid search over small rational points.
        let systems: Vec<Vec<Vec<Rat>>> = vec![
            rows(&[&[2, -3], &[-1, 2], &[1, 1]]),
            rows(&[&[1, 1], &[-1, -1]]),
            rows(&[&[1, 2, 3], &[-1, 0, 1], &[0, -1, 1]]),
            rows(&[&[1, -2, 1], &[-1, 2, -1]]),
        ];
        for sys in systems {
            let fm = solve_strict_positive(&sys);
            let mut grid = false;
            let range: Vec<i64> = (-6..=6).collect();
            let n = sys[0].len();
            let mut point = vec![0i64; n];
            fn rec(
                sys: &[Vec<Rat>],
                range: &[i64],
                point: &mut Vec<i64>,
                i: usize,
                found: &mut bool,
            ) {
                if *found {
                    return;
                }
                if i == point.len() {
                    let ok = sys.iter().all(|r| {
                        let dot: Rat = r
                            .iter()
                            .zip(point.iter())
                            .map(|(c, &x)| c * Rat::from_i64(x).unwrap())
                            .sum();
                        dot.is_positive()
                    });
                    if ok {
                        *found = true;
                    }
                    return;
                }
                for &v in range {
                    point[i] = v;
                    rec(sys, range, point, i + 1, found);
                }
            }
            rec(&sys, &range, &mut point, 0, &mut grid);
            match fm {
                Some(x) => {
                    check_witness(&sys, &x);
                    assert!(grid, "FM found a witness but the grid oracle did not");
                }
                None => assert!(!grid, "grid oracle found a witness but FM did not"),
            }
        }
    }
}
