//! Counting `W.μ ∩ [λ̃ + (1 - σ) X_*(T)]`, its Levi decomposition, and the
//! weight-multiplicity oracle for minuscule `μ`.
//!
//! σ permutes the `d` copies of each factor cyclically, so `(1 - σ) X_*(T)`
//! is the sublattice whose copies sum to zero. A coset is therefore fixed by
//! the restriction `λ` (sum over copies) and the per-factor total `κ`.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{levi_blocks, lambda_from_invariants, Block, GroupDatum, IntVector, SigmaInvariants};
use crate::sweep::next_permutation;

/// Default cap on enumerated witnesses.
pub const WITNESS_CAP: usize = 1_000_000;

/// Per factor, `d` integer `n`-vectors: an element of `X_*(T)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CocharTuple(pub Vec<Vec<Vec<i64>>>);

impl CocharTuple {
    /// One factor given by its copies.
    pub fn single(copies: Vec<Vec<i64>>) -> Self {
        Self(vec![copies])
    }

    pub fn factors(&self) -> &[Vec<Vec<i64>>] {
        &self.0
    }

    /// Sum over the copies of factor `j`.
    pub fn restriction(&self, j: usize) -> Vec<i64> {
        let copies = &self.0[j];
        let n = copies.first().map_or(0, Vec::len);
        (0..n).map(|i| copies.iter().map(|c| c[i]).sum()).collect()
    }

    pub fn restrictions(&self) -> IntVector {
        IntVector((0..self.0.len()).map(|j| self.restriction(j)).collect())
    }

    /// Every copy sorted weakly decreasing.
    pub fn dominant(&self) -> CocharTuple {
        CocharTuple(
            self.0
                .iter()
                .map(|copies| {
                    copies
                        .iter()
                        .map(|c| {
                            let mut c = c.clone();
                            c.sort_unstable_by(|a, b| b.cmp(a));
                            c
                        })
                        .collect()
                })
                .collect(),
        )
    }

    pub fn is_dominant(&self) -> bool {
        self.0
            .iter()
            .flatten()
            .all(|c| c.windows(2).all(|w| w[0] >= w[1]))
    }

    /// Every copy has entries in `{a, a + 1}` for some `a`.
    pub fn is_minuscule(&self) -> bool {
        self.0.iter().flatten().all(|c| {
            let lo = c.iter().min().copied().unwrap_or(0);
            c.iter().all(|&x| x == lo || x == lo + 1)
        })
    }

    pub(crate) fn check_against(&self, g: &GroupDatum) -> Result<()> {
        let ok = self.0.len() == g.factors().len()
            && self
                .0
                .iter()
                .zip(g.factors())
                .all(|(copies, f)| copies.len() == f.d && copies.iter().all(|c| c.len() == f.n));
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidSpec(
                "cocharacter does not match the group shape".into(),
            ))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitCount {
    pub count: u64,
    /// Lexicographic; truncated when `overflow` is set.
    pub witnesses: Vec<CocharTuple>,
    pub overflow: bool,
}

fn arrangements(v: &[i64]) -> Vec<Vec<i64>> {
    let mut cur = v.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    while next_permutation(&mut cur) {
        out.push(cur.clone());
    }
    out
}

/// Tuples of rearrangements of the copies of one factor summing to `target`.
fn factor_witnesses(copies: &[Vec<i64>], target: &[i64]) -> Vec<Vec<Vec<i64>>> {
    let per: Vec<Vec<Vec<i64>>> = copies.iter().map(|c| arrangements(c)).collect();
    let n = target.len();
    // Coordinate bounds reachable by the copies after position `t`.
    let mut lo = vec![vec![0i64; n]; copies.len() + 1];
    let mut hi = vec![vec![0i64; n]; copies.len() + 1];
    for t in (0..copies.len()).rev() {
        let (mn, mx) = (
            *copies[t].iter().min().unwrap_or(&0),
            *copies[t].iter().max().unwrap_or(&0),
        );
        for i in 0..n {
            lo[t][i] = lo[t + 1][i] + mn;
            hi[t][i] = hi[t + 1][i] + mx;
        }
    }
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(copies.len());
    let mut residual = target.to_vec();
    witness_rec(&per, &lo, &hi, 0, &mut residual, &mut chosen, &mut out);
    out
}

fn witness_rec(
    per: &[Vec<Vec<i64>>],
    lo: &[Vec<i64>],
    hi: &[Vec<i64>],
    t: usize,
    residual: &mut Vec<i64>,
    chosen: &mut Vec<Vec<i64>>,
    out: &mut Vec<Vec<Vec<i64>>>,
) {
    if t == per.len() {
        if residual.iter().all(|&r| r == 0) {
            out.push(chosen.clone());
        }
        return;
    }
    if residual
        .iter()
        .enumerate()
        .any(|(i, &r)| r < lo[t][i] || r > hi[t][i])
    {
        return;
    }
    for arr in &per[t] {
        for (r, a) in residual.iter_mut().zip(arr) {
            *r -= a;
        }
        chosen.push(arr.clone());
        witness_rec(per, lo, hi, t + 1, residual, chosen, out);
        chosen.pop();
        for (r, a) in residual.iter_mut().zip(arr) {
            *r += a;
        }
    }
}

/// `#(W.μ ∩ [λ̃ + (1 - σ) X_*(T)])` with lexicographic witnesses, capped at
/// [`WITNESS_CAP`].
pub fn orbit_intersection_count(
    g: &GroupDatum,
    mu: &CocharTuple,
    lambda: &IntVector,
    kappa: &[i64],
) -> Result<OrbitCount> {
    orbit_intersection_count_capped(g, mu, lambda, kappa, WITNESS_CAP)
}

pub fn orbit_intersection_count_capped(
    g: &GroupDatum,
    mu: &CocharTuple,
    lambda: &IntVector,
    kappa: &[i64],
    cap: usize,
) -> Result<OrbitCount> {
    mu.check_against(g)?;
    if lambda.0.len() != g.factors().len() || kappa.len() != g.factors().len() {
        return Err(Error::InvalidSpec("lambda and kappa need one entry per factor".into()));
    }
    for (j, (l, &k)) in lambda.0.iter().zip(kappa).enumerate() {
        if l.len() != g.factors()[j].n {
            return Err(Error::LengthMismatch(l.len(), g.factors()[j].n));
        }
        let total: i64 = l.iter().sum();
        if total != k {
            return Err(Error::ClassMismatch(format!(
                "factor {j}: lambda total {total} but kappa {k}"
            )));
        }
    }
    let per_factor: Vec<Vec<Vec<Vec<i64>>>> = mu
        .0
        .iter()
        .zip(&lambda.0)
        .map(|(copies, l)| factor_witnesses(copies, l))
        .collect();
    let count = per_factor.iter().map(|w| w.len() as u64).product();
    let mut witnesses = vec![Vec::new()];
    let mut overflow = false;
    for choices in &per_factor {
        let mut next = Vec::new();
        'outer: for prefix in &witnesses {
            for c in choices {
                if next.len() >= cap {
                    overflow = true;
                    break 'outer;
                }
                let mut w: Vec<Vec<Vec<i64>>> = prefix.clone();
                w.push(c.clone());
                next.push(w);
            }
        }
        witnesses = next;
    }
    Ok(OrbitCount {
        count,
        witnesses: witnesses.into_iter().map(CocharTuple).collect(),
        overflow,
    })
}

/// Dimension of the `target` weight space of `⊗_j ⊗_τ Λ^{k_τ}(std) ⊗ det^{a_τ}`
/// for minuscule `μ`, by convolving subset indicators copy by copy.
pub fn weight_multiplicity(g: &GroupDatum, mu: &CocharTuple, target: &IntVector) -> Result<u64> {
    mu.check_against(g)?;
    if !mu.is_minuscule() {
        return Err(Error::NotMinuscule);
    }
    if target.0.len() != g.factors().len() {
        return Err(Error::InvalidSpec("target needs one vector per factor".into()));
    }
    let mut total = 1u64;
    for (copies, t) in mu.0.iter().zip(&target.0) {
        let n = t.len();
        let mut shifted = t.clone();
        let mut dist: HashMap<Vec<i64>, u64> = HashMap::from([(vec![0i64; n], 1)]);
        for c in copies {
            let base = c.iter().min().copied().unwrap_or(0);
            for s in shifted.iter_mut() {
                *s -= base;
            }
            let k = c.iter().filter(|&&x| x > base).count() as u32;
            let subsets: Vec<u64> = (0u64..1 << n).filter(|m| m.count_ones() == k).collect();
            let mut next: HashMap<Vec<i64>, u64> = HashMap::new();
            for (v, mult) in &dist {
                for &s in &subsets {
                    let mut w = v.clone();
                    for (i, x) in w.iter_mut().enumerate() {
                        *x += ((s >> i) & 1) as i64;
                    }
                    *next.entry(w).or_insert(0) += mult;
                }
            }
            dist = next;
        }
        total *= dist.get(&shifted).copied().unwrap_or(0);
    }
    Ok(total)
}

/// Sub-multisets of `pool` (sorted descending) of the given sizes, one per
/// block, each returned sorted descending.
fn distributions(pool: &[i64], sizes: &[usize]) -> Vec<Vec<Vec<i64>>> {
    if sizes.is_empty() {
        return if pool.is_empty() { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    let size = sizes[0];
    for pick in arrangements_of_choice(pool.len(), size) {
        let mut taken = Vec::with_capacity(size);
        let mut rest = Vec::with_capacity(pool.len() - size);
        for (i, &x) in pool.iter().enumerate() {
            if pick.contains(&i) {
                taken.push(x);
            } else {
                rest.push(x);
            }
        }
        for mut tail in distributions(&rest, &sizes[1..]) {
            let mut v = vec![taken.clone()];
            v.append(&mut tail);
            out.push(v);
        }
    }
    out.sort();
    out.dedup();
    out
}

fn arrangements_of_choice(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// `I_{μ,b}`: block-dominant elements of `W.μ` whose block sums (over all
/// copies) equal `kappa_m`. Single factor; blocks partition `n`.
pub fn levi_index_set(
    g: &GroupDatum,
    blocks: &[Block],
    mu: &CocharTuple,
    kappa_m: &[i64],
) -> Result<Vec<CocharTuple>> {
    mu.check_against(g)?;
    let [factor] = g.factors() else {
        return Err(Error::InvalidSpec("Levi index set needs a single factor".into()));
    };
    let sizes: Vec<usize> = blocks.iter().map(|b| b.size).collect();
    if sizes.iter().sum::<usize>() != factor.n || kappa_m.len() != blocks.len() {
        return Err(Error::InvalidSpec("blocks must partition n, one kappa per block".into()));
    }
    let per_copy: Vec<Vec<Vec<Vec<i64>>>> = mu.0[0]
        .iter()
        .map(|c| {
            let mut pool = c.clone();
            pool.sort_unstable_by(|a, b| b.cmp(a));
            distributions(&pool, &sizes)
        })
        .collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    let mut sums = vec![0i64; blocks.len()];
    levi_rec(&per_copy, 0, &mut sums, kappa_m, &mut chosen, &mut out);
    out.sort();
    out.dedup();
    Ok(out)
}

fn levi_rec(
    per_copy: &[Vec<Vec<Vec<i64>>>],
    t: usize,
    sums: &mut Vec<i64>,
    kappa_m: &[i64],
    chosen: &mut Vec<Vec<i64>>,
    out: &mut Vec<CocharTuple>,
) {
    if t == per_copy.len() {
        if sums.as_slice() == kappa_m {
            out.push(CocharTuple::single(chosen.clone()));
        }
        return;
    }
    for dist in &per_copy[t] {
        for (s, block) in sums.iter_mut().zip(dist) {
            *s += block.iter().sum::<i64>();
        }
        chosen.push(dist.concat());
        levi_rec(per_copy, t + 1, sums, kappa_m, chosen, out);
        chosen.pop();
        for (s, block) in sums.iter_mut().zip(dist) {
            *s -= block.iter().sum::<i64>();
        }
    }
}

/// The orbit count computed directly in `G` and as a sum over `I_{μ,b}` of
/// products of block counts. Single factor.
pub fn orbit_count_via_levi(
    g: &GroupDatum,
    mu: &CocharTuple,
    inv: &SigmaInvariants,
) -> Result<(u64, u64)> {
    let [factor] = g.factors() else {
        return Err(Error::InvalidSpec("Levi comparison needs a single factor".into()));
    };
    let lambda = lambda_from_invariants(g, inv)?;
    let direct = orbit_intersection_count(g, mu, &lambda, inv.kappa())?.count;
    let blocks = levi_blocks(&inv.nu()[0])?;
    let kappa_m: Vec<i64> = blocks.iter().map(Block::kappa).collect();
    let mut via = 0u64;
    for mu_m in levi_index_set(g, &blocks, mu, &kappa_m)? {
        let mut product = 1u64;
        let mut start = 0;
        for b in &blocks {
            let block_group = GroupDatum::res(factor.d, b.size);
            let block_mu = CocharTuple::single(
                mu_m.0[0].iter().map(|c| c[start..start + b.size].to_vec()).collect(),
            );
            let block_inv = b.invariants();
            let block_lambda = lambda_from_invariants(&GroupDatum::gl(b.size), &block_inv)?;
            product *= orbit_intersection_count(&block_group, &block_mu, &block_lambda, &[b.kappa()])?.count;
            start += b.size;
        }
        via += product;
    }
    Ok((direct, via))
}
