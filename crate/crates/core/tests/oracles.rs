//! Independent brute-force oracles against the library.

use std::collections::HashSet;

use adlv_core::affine_weyl::AffineWeylElt;
use adlv_core::elcharts::{enumerate_p, FSpec};
use adlv_core::group::{
    adlv_dimension, in_b_g_mu, levi_blocks, GroupDatum, SigmaInvariants, Q,
};
use adlv_core::orbits::{levi_index_set, orbit_intersection_count, CocharTuple};
use adlv_core::group::IntVector;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn boxed(n: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    (0..n).fold(vec![Vec::new()], |acc, _| {
        acc.into_iter()
            .flat_map(|v: Vec<i64>| {
                (lo..=hi).map(move |x| {
                    let mut v = v.clone();
                    v.push(x);
                    v
                })
            })
            .collect()
    })
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Distinct tuples of rearranged copies summing to `lambda`.
fn brute_orbit_count(copies: &[Vec<i64>], lambda: &[i64]) -> u64 {
    let n = lambda.len();
    let perms = permutations(n);
    let mut tuples: Vec<Vec<Vec<i64>>> = vec![Vec::new()];
    for c in copies {
        let arrangements: HashSet<Vec<i64>> =
            perms.iter().map(|p| p.iter().map(|&i| c[i]).collect()).collect();
        tuples = tuples
            .into_iter()
            .flat_map(|t| {
                arrangements.iter().map(move |a| {
                    let mut t = t.clone();
                    t.push(a.clone());
                    t
                })
            })
            .collect();
    }
    tuples
        .iter()
        .filter(|t| (0..n).all(|i| t.iter().map(|c| c[i]).sum::<i64>() == lambda[i]))
        .count() as u64
}

#[test]
fn orbit_count_matches_brute_force() {
    let cases: Vec<Vec<Vec<i64>>> = vec![
        vec![vec![1, 0, 0], vec![1, 0, 0]],
        vec![vec![2, 0, 0], vec![1, 1, 0]],
        vec![vec![2, 1, 0], vec![1, 0, -1]],
        vec![vec![1, 1, 0, 0], vec![1, 0, 0, 0], vec![1, 1, 1, 0]],
        vec![vec![3, 0], vec![2, 1], vec![1, 0]],
    ];
    for copies in cases {
        let n = copies[0].len();
        let d = copies.len();
        let g = GroupDatum::res(d, n);
        let mu = CocharTuple::single(copies.clone());
        let kappa: i64 = copies.iter().flatten().sum();
        let lo = copies.iter().map(|c| c.iter().min().unwrap()).sum::<i64>();
        let hi = copies.iter().map(|c| c.iter().max().unwrap()).sum::<i64>();
        for lambda in boxed(n, lo, hi) {
            if lambda.iter().sum::<i64>() != kappa {
                continue;
            }
            let got = orbit_intersection_count(&g, &mu, &IntVector::single(lambda.clone()), &[kappa])
                .unwrap();
            assert_eq!(got.count, brute_orbit_count(&copies, &lambda), "{copies:?} {lambda:?}");
            assert_eq!(got.witnesses.len() as u64, got.count);
            let mut sorted = got.witnesses.clone();
            sorted.sort();
            assert_eq!(sorted, got.witnesses, "witnesses are lexicographic");
        }
    }
}

/// Number of affine root hyperplanes `v_i - v_j = k` between two generic
/// points.
fn separating_hyperplanes(a: &[Q], b: &[Q]) -> u64 {
    let n = a.len();
    let mut count = 0;
    for i in 0..n {
        for j in i + 1..n {
            let x = (a[i] - a[j]).floor().to_integer();
            let y = (b[i] - b[j]).floor().to_integer();
            count += (x - y).unsigned_abs();
        }
    }
    count
}

#[test]
fn length_counts_separating_hyperplanes() {
    for n in 2..=4usize {
        let p: Vec<Q> = (0..n).map(|i| Q::new((n - 1 - i) as i64, n as i64)).collect();
        let bound = if n == 4 { 2 } else { 3 };
        for lambda in boxed(n, -bound, bound) {
            for perm in permutations(n) {
                let x = AffineWeylElt::new(lambda.clone(), perm).unwrap();
                assert_eq!(x.length(), separating_hyperplanes(&p, &x.act(&p)), "{x:?}");
            }
        }
    }
}

#[test]
fn straightness_matches_long_power_test() {
    for n in 2..=3usize {
        for lambda in boxed(n, -2, 2) {
            for perm in permutations(n) {
                let x = AffineWeylElt::new(lambda.clone(), perm).unwrap();
                let l = x.length();
                let r = x.perm_order() as u64;
                let brute = (1..=2 * r).all(|k| x.pow(k as u32).length() == k * l);
                assert_eq!(x.is_straight(), brute, "{x:?}");
            }
        }
    }
}

/// All non-negative `nd`-vectors summing to `m` whose restriction stays
/// below the line of slope `m / n`.
fn brute_p(m: i64, n: usize, d: usize) -> HashSet<Vec<i64>> {
    boxed(n * d, 0, m)
        .into_iter()
        .filter(|v| v.iter().sum::<i64>() == m)
        .filter(|v| {
            let mut partial = 0;
            (0..n).all(|i| {
                partial += v[i * d..(i + 1) * d].iter().sum::<i64>();
                n as i64 * partial <= (i as i64 + 1) * m
            })
        })
        .collect()
}

#[test]
fn enumeration_matches_brute_force() {
    for (m, n) in [(1, 2), (1, 3), (2, 3), (3, 4), (2, 5), (3, 5)] {
        for d in 1..=2usize {
            let m_vec = if d == 1 { vec![m] } else { vec![m - m / 2, m / 2] };
            let spec = FSpec::new(n, m_vec).unwrap();
            let got: HashSet<Vec<i64>> = enumerate_p(&spec, None)
                .unwrap()
                .iter()
                .map(|t| t.flat())
                .collect();
            assert_eq!(got, brute_p(m, n, d), "m={m} n={n} d={d}");
        }
    }
}

#[test]
fn split_counts_are_rational_catalan() {
    for (m, n) in [(1, 2), (2, 3), (3, 4), (2, 5), (3, 5), (5, 7), (3, 8)] {
        let spec = FSpec::split(m, n).unwrap();
        let expected = binomial((m as u64) + n as u64, n as u64) / (m as u64 + n as u64);
        assert_eq!(enumerate_p(&spec, None).unwrap().len() as u64, expected, "m={m} n={n}");
    }
}

fn newton_grid(n: usize) -> Vec<Vec<Q>> {
    // Dominant points with slopes in [0, 1], denominators up to 5, integral breakpoints.
    let mut slopes: Vec<Q> = (1..=5).flat_map(|q| (0..=q).map(move |p| Q::new(p, q))).collect();
    slopes.sort_unstable_by(|a, b| b.cmp(a));
    slopes.dedup();
    fn rec(left: usize, slopes: &[Q], from: usize, cur: &mut Vec<Q>, out: &mut Vec<Vec<Q>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for (i, &s) in slopes.iter().enumerate().skip(from) {
            let q = *s.denom() as usize;
            let mut size = q;
            while size <= left {
                cur.extend(std::iter::repeat(s).take(size));
                rec(left - size, slopes, i + 1, cur, out);
                cur.truncate(cur.len() - size);
                size += q;
            }
        }
    }
    let mut out = Vec::new();
    rec(n, &slopes, 0, &mut Vec::new(), &mut out);
    out
}

#[test]
fn fibre_dimensions_are_non_negative() {
    let mut checked = 0;
    for n in 2..=5usize {
        let g = GroupDatum::gl(n);
        for k in 0..=n {
            let mu_v: Vec<i64> = (0..n).map(|i| i64::from(i < k)).collect();
            let mu = CocharTuple::single(vec![mu_v]);
            for nu in newton_grid(n) {
                let total: Q = nu.iter().sum();
                if total != Q::from_integer(k as i64) {
                    continue;
                }
                let inv = SigmaInvariants::single(nu.clone(), k as i64).unwrap();
                if !in_b_g_mu(&g, &mu, &inv).unwrap() {
                    continue;
                }
                let dim_g = adlv_dimension(&g, &mu, &inv).unwrap();
                let blocks = levi_blocks(&nu).unwrap();
                let kappa_m: Vec<i64> = blocks.iter().map(|b| b.kappa()).collect();
                for mu_m in levi_index_set(&g, &blocks, &mu, &kappa_m).unwrap() {
                    let mut dim_m = 0;
                    let mut start = 0;
                    for b in &blocks {
                        let part = mu_m.0[0][0][start..start + b.size].to_vec();
                        dim_m += adlv_dimension(
                            &GroupDatum::gl(b.size),
                            &CocharTuple::single(vec![part]),
                            &b.invariants(),
                        )
                        .unwrap();
                        start += b.size;
                    }
                    assert!(dim_g >= dim_m, "n={n} mu={mu:?} nu={nu:?}: {dim_g} < {dim_m}");
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 50, "only {checked} cases");
}
