//! Exhaustive grid checks. Each criterion returns a deterministic tally;
//! work items run in parallel and are merged in grid order.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::affine_weyl::{basic_element, search_straight, verify_prop_lambda, AffineWeylElt};
use crate::elcharts::{
    cell_table, chart_from_type, enumerate_p, type_word, zeta, ElChart, FSpec, TypeVector,
};
use crate::group::{
    adlv_dimension, check_lambda_window, dominance_leq, functoriality_check, in_b_g_mu,
    lambda_from_invariants, lambda_superbasic_floor, FunctorialityMode, GroupDatum, IntVector,
    SigmaInvariants, Q,
};
use crate::orbits::{orbit_count_via_levi, orbit_intersection_count, weight_multiplicity, CocharTuple};
use crate::sweep::{check_class, Alphabet};

pub const SCHEMA_VERSION: u32 = 1;

/// `(m, n)` pairs of the sweep and cotype grids.
pub const CHART_GRID: [(i64, usize); 7] = [(1, 2), (1, 3), (2, 3), (3, 4), (2, 5), (3, 5), (5, 7)];

const SAMPLE_CAP: usize = 5;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub checked: u64,
    pub violations: u64,
    pub samples: Vec<String>,
    pub stats: BTreeMap<String, u64>,
}

impl Tally {
    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.violations += 1;
            if self.samples.len() < SAMPLE_CAP {
                self.samples.push(describe());
            }
        }
    }

    fn fail(&mut self, describe: impl FnOnce() -> String) {
        self.check(false, describe);
    }

    fn bump(&mut self, key: &str, by: u64) {
        *self.stats.entry(key.to_string()).or_insert(0) += by;
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.checked += other.checked;
        self.violations += other.violations;
        for s in other.samples {
            if self.samples.len() < SAMPLE_CAP {
                self.samples.push(s);
            }
        }
        for (k, v) in other.stats {
            *self.stats.entry(k).or_insert(0) += v;
        }
        self
    }

    fn merge_all(parts: impl IntoIterator<Item = Tally>) -> Tally {
        parts.into_iter().fold(Tally::default(), Tally::merge)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionReport {
    pub id: u8,
    pub title: String,
    pub passed: bool,
    #[serde(flatten)]
    pub tally: Tally,
}

impl CriterionReport {
    fn new(id: u8, title: &str, tally: Tally) -> Self {
        Self {
            id,
            title: title.to_string(),
            passed: tally.violations == 0,
            tally,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub schema_version: u32,
    pub passed: bool,
    pub criteria: Vec<CriterionReport>,
}

pub fn verify_all() -> VerifyReport {
    let criteria = vec![
        worked_example(),
        sweep_grid(),
        cotype_grid(),
        cells_split_example(),
        cells_res_example(),
        lambda_properties(),
        affine_weyl_checks(),
        counting_checks(),
    ];
    VerifyReport {
        schema_version: SCHEMA_VERSION,
        passed: criteria.iter().all(|c| c.passed),
        criteria,
    }
}

// ---------------------------------------------------------------- grids

/// Weak compositions of `m` into `d` non-negative parts, lexicographic.
pub fn m_vec_splits(m: i64, d: usize) -> Vec<Vec<i64>> {
    if d == 1 {
        return vec![vec![m]];
    }
    (0..=m)
        .flat_map(|first| {
            m_vec_splits(m - first, d - 1).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

/// Every `FSpec` of the chart grid for `d = 1..=max_d`.
pub fn chart_specs(max_d: usize) -> Vec<FSpec> {
    let mut out = Vec::new();
    for &(m, n) in &CHART_GRID {
        for d in 1..=max_d {
            for split in m_vec_splits(m, d) {
                out.push(FSpec::new(n, split).expect("grid pairs are coprime"));
            }
        }
    }
    out
}

/// Dominant Newton points of length `n` whose slopes lie in `[lo, hi]` with
/// denominators at most `max_den`; breakpoints are integral.
pub fn newton_points(n: usize, lo: i64, hi: i64, max_den: i64) -> Vec<Vec<Q>> {
    let slopes: BTreeSet<Q> = (1..=max_den)
        .flat_map(|q| (lo * q..=hi * q).map(move |p| Q::new(p, q)))
        .collect();
    let slopes: Vec<Q> = slopes.into_iter().rev().collect();
    let mut out = Vec::new();
    newton_rec(n, &slopes, 0, &mut Vec::new(), &mut out);
    out
}

fn newton_rec(left: usize, slopes: &[Q], from: usize, cur: &mut Vec<Q>, out: &mut Vec<Vec<Q>>) {
    if left == 0 {
        out.push(cur.clone());
        return;
    }
    for (i, &s) in slopes.iter().enumerate().skip(from) {
        let q = *s.denom() as usize;
        let mut size = q;
        while size <= left {
            cur.extend(std::iter::repeat(s).take(size));
            newton_rec(left - size, slopes, i + 1, cur, out);
            cur.truncate(cur.len() - size);
            size += q;
        }
    }
}

fn invariants_of(nu: Vec<Q>) -> SigmaInvariants {
    let total: Q = nu.iter().sum();
    SigmaInvariants::single(nu, total.to_integer()).expect("integral breakpoints")
}

/// `(a + 1)^k a^{n - k}`.
fn minuscule(n: usize, k: usize, a: i64) -> Vec<i64> {
    (0..n).map(|i| if i < k { a + 1 } else { a }).collect()
}

/// Integer vectors with entries in `[lo, hi]` and the given total.
fn int_vectors(n: usize, lo: i64, hi: i64, total: i64) -> Vec<Vec<i64>> {
    if n == 0 {
        return if total == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in lo..=hi {
        let rest = total - first;
        let left = (n - 1) as i64;
        if rest < left * lo || rest > left * hi {
            continue;
        }
        for mut tail in int_vectors(n - 1, lo, hi, rest) {
            tail.insert(0, first);
            out.push(tail);
        }
    }
    out
}

fn to_q(v: &[i64]) -> Vec<Q> {
    v.iter().map(|&x| Q::from_integer(x)).collect()
}

fn par_merge<T: Sync>(items: &[T], f: impl Fn(&T) -> Tally + Sync + Send) -> Tally {
    Tally::merge_all(items.par_iter().map(f).collect::<Vec<_>>())
}

// ------------------------------------------------------------ criterion 1

pub fn worked_example() -> CriterionReport {
    let mut t = Tally::default();
    let spec = FSpec::split(5, 7).expect("coprime");
    let n0 = ElChart::new(spec.clone(), vec![(0..7).collect()]).expect("N_0 is a chart");
    let ty = n0.chart_type();
    t.check(ty.flat() == [0, 1, 1, 0, 1, 1, 1], || format!("type(N_0) = {:?}", ty.flat()));
    let w = type_word(&ty, &spec);
    t.check(w.levels() == [5, 3, 1, 6, 4, 2, 0], || format!("levels {:?}", w.levels()));
    let s = w.sweep();
    t.check(s.letters() == [5, 5, -2, -2, -2, -2, -2], || format!("sweep {:?}", s.letters()));
    match zeta(&ty, &spec) {
        Ok(z) => {
            t.check(z.flat() == [0, 0, 1, 1, 1, 1, 1], || format!("zeta {:?}", z.flat()));
            t.check(z == n0.cotype(), || format!("cotype(N_0) = {:?}", n0.cotype().flat()));
        }
        Err(e) => t.fail(|| format!("zeta failed: {e}")),
    }
    CriterionReport::new(1, "worked example (m, n) = (5, 7)", t)
}

// ------------------------------------------------------------ criterion 2

/// Rearrangement classes of the type words of `P_{m,n,d}`.
pub fn sweep_classes(spec: &FSpec) -> Vec<Alphabet> {
    let types = enumerate_p(spec, None).expect("no hodge filter");
    let set: BTreeSet<Alphabet> = types.iter().map(|t| type_word(t, spec).alphabet()).collect();
    set.into_iter().collect()
}

pub fn sweep_grid() -> CriterionReport {
    let specs = chart_specs(3);
    let items: Vec<(FSpec, Alphabet)> = specs
        .iter()
        .flat_map(|s| sweep_classes(s).into_iter().map(move |a| (s.clone(), a)))
        .collect();
    let t = par_merge(&items, |(spec, alphabet)| {
        let mut t = Tally::default();
        let r = check_class(alphabet);
        let d = spec.d();
        t.bump("classes", 1);
        t.bump(&format!("classes_d{d}"), 1);
        t.bump("words", r.class_size);
        t.bump("dyck_words", r.dyck_count);
        if !r.bijective {
            t.bump("non_bijective_classes", 1);
            t.bump(&format!("non_bijective_classes_d{d}"), 1);
        }
        if !r.dyck_preserving {
            t.bump("non_dyck_preserving_classes", 1);
        }
        if r.bijective && !r.round_trip {
            t.bump("round_trip_failures", 1);
        }
        let ok = r.bijective && r.dyck_preserving && r.round_trip;
        t.check(ok, || {
            format!(
                "n={} m_vec={:?} class {:?}: {} words, {} images, dyck {} -> {}",
                spec.n(),
                spec.m_vec(),
                alphabet.multisets(),
                r.class_size,
                r.image_size,
                r.dyck_count,
                r.dyck_image_count
            )
        });
        t
    });
    CriterionReport::new(2, "sweep bijective and Dyck-preserving on every class", t)
}

// ------------------------------------------------------------ criterion 3

fn row_multisets(t: &TypeVector) -> TypeVector {
    t.dominant()
}

pub fn cotype_grid() -> CriterionReport {
    let specs = chart_specs(3);
    let t = par_merge(&specs, |spec| {
        let mut t = Tally::default();
        let label = || format!("n={} m_vec={:?}", spec.n(), spec.m_vec());
        let types = enumerate_p(spec, None).expect("no hodge filter");
        let p_set: HashSet<&TypeVector> = types.iter().collect();
        let mut cotypes = HashSet::with_capacity(types.len());
        let mut zeta_of = HashMap::with_capacity(types.len());
        t.bump("types", types.len() as u64);
        for ty in &types {
            let chart = match chart_from_type(ty, spec) {
                Ok(c) => c,
                Err(e) => {
                    t.fail(|| format!("{}: {:?} has no chart: {e}", label(), ty.flat()));
                    continue;
                }
            };
            t.check(chart.is_normalized() && &chart.chart_type() == ty, || {
                format!("{}: chart of {:?} does not round-trip", label(), ty.flat())
            });
            let co = chart.cotype();
            t.check(p_set.contains(&co), || {
                format!("{}: cotype {:?} outside P", label(), co.flat())
            });
            match zeta(ty, spec) {
                Ok(z) => t.check(z == co, || {
                    format!("{}: zeta {:?} != cotype {:?}", label(), z.flat(), co.flat())
                }),
                Err(e) => t.fail(|| format!("{}: zeta failed on {:?}: {e}", label(), ty.flat())),
            }
            zeta_of.insert(ty.clone(), co.clone());
            t.check(cotypes.insert(co), || format!("{}: repeated cotype", label()));
        }
        t.check(cotypes.len() == types.len(), || {
            format!("{}: {} cotypes for {} types", label(), cotypes.len(), types.len())
        });
        // ζ preserves each P_μ.
        for (ty, z) in &zeta_of {
            t.check(row_multisets(ty) == row_multisets(z), || {
                format!("{}: zeta moves {:?} out of its P_mu", label(), ty.flat())
            });
        }
        t
    });
    CriterionReport::new(3, "cotype is a bijection onto P and equals zeta", t)
}

// ---------------------------------------------------------- criteria 4, 5

fn cell_checks(
    t: &mut Tally,
    spec: &FSpec,
    hodge: &TypeVector,
    g: &GroupDatum,
    mu: &CocharTuple,
    inv: &SigmaInvariants,
    cells: usize,
    dims: &[i64],
    top: u64,
) {
    let lambda = match lambda_from_invariants(g, inv) {
        Ok(l) => l.0[0].clone(),
        Err(e) => return t.fail(|| format!("lambda failed: {e}")),
    };
    let table = match cell_table(spec, hodge, &lambda) {
        Ok(tab) => tab,
        Err(e) => return t.fail(|| format!("cell table failed: {e}")),
    };
    t.check(table.cells.len() == cells, || format!("{} cells", table.cells.len()));
    let mut got: Vec<i64> = table.cells.iter().map(|c| c.dim).collect();
    got.sort_unstable();
    t.check(got == dims, || format!("dimensions {got:?}"));
    t.check(table.top_count == top, || format!("top_count {}", table.top_count));
    match adlv_dimension(g, mu, inv) {
        Ok(dim) => t.check(table.max_dim() == Some(dim), || {
            format!("max cell dim {:?} but dimension formula {dim}", table.max_dim())
        }),
        Err(e) => t.fail(|| format!("dimension formula failed: {e}")),
    }
    if g.factors()[0].d > 1 {
        let count = orbit_intersection_count(g, mu, &IntVector::single(lambda.clone()), inv.kappa())
            .map(|c| c.count);
        t.check(count == Ok(top), || format!("orbit count {count:?}"));
        let mult = weight_multiplicity(g, mu, &IntVector::single(lambda));
        t.check(mult == Ok(top), || format!("weight multiplicity {mult:?}"));
    }
}

pub fn cells_split_example() -> CriterionReport {
    let mut t = Tally::default();
    let spec = FSpec::split(5, 7).expect("coprime");
    let hodge = TypeVector::new(vec![vec![1, 1, 1, 1, 1, 0, 0]]).expect("shape");
    let mu = CocharTuple::single(vec![vec![1, 1, 1, 1, 1, 0, 0]]);
    let inv = SigmaInvariants::central(5, 7);
    cell_checks(&mut t, &spec, &hodge, &GroupDatum::gl(7), &mu, &inv, 3, &[0, 1, 2], 1);
    CriterionReport::new(4, "cell table GL_7, mu = (1^5, 0^2)", t)
}

pub fn cells_res_example() -> CriterionReport {
    let mut t = Tally::default();
    let spec = FSpec::new(3, vec![1, 1]).expect("coprime");
    let hodge = TypeVector::new(vec![vec![1, 0, 0], vec![1, 0, 0]]).expect("shape");
    let mu = CocharTuple::single(vec![vec![1, 0, 0], vec![1, 0, 0]]);
    let inv = SigmaInvariants::central(2, 3);
    cell_checks(&mut t, &spec, &hodge, &GroupDatum::res(2, 3), &mu, &inv, 3, &[0, 1, 1], 2);
    CriterionReport::new(5, "cell table Res GL_3, d = 2, mu = ((1,0,0),(1,0,0))", t)
}

// ------------------------------------------------------------ criterion 6

pub fn lambda_grid() -> Vec<(GroupDatum, SigmaInvariants)> {
    let mut out = Vec::new();
    for n in 1..=5 {
        let nus = newton_points(n, -1, 2, n as i64);
        for d in 1..=3 {
            if n * d > 9 {
                continue;
            }
            for nu in &nus {
                out.push((GroupDatum::res(d, n), invariants_of(nu.clone())));
            }
        }
    }
    // A product datum: GL_2 x Res_2 GL_2.
    let g = GroupDatum::new(vec![
        crate::group::Factor { n: 2, d: 1 },
        crate::group::Factor { n: 2, d: 2 },
    ])
    .expect("valid");
    let nus = newton_points(2, -1, 1, 2);
    for a in &nus {
        for b in &nus {
            let ka = a.iter().sum::<Q>().to_integer();
            let kb = b.iter().sum::<Q>().to_integer();
            let inv = SigmaInvariants::new(vec![a.clone(), b.clone()], vec![ka, kb]).expect("valid");
            out.push((g.clone(), inv));
        }
    }
    out
}

/// `λ'' ≤ ν` with total κ implies `λ'' ⪯ λ_G`, over a box around ν.
fn maximality(nu: &[Q], kappa: i64, lambda: &[i64]) -> Option<Vec<i64>> {
    let lo = nu.iter().min().expect("n >= 1").floor().to_integer() - 2;
    let hi = nu.iter().max().expect("n >= 1").ceil().to_integer() + 2;
    let lq = to_q(lambda);
    int_vectors(nu.len(), lo, hi, kappa).into_iter().find(|cand| {
        let cq = to_q(cand);
        dominance_leq(&cq, nu).expect("same length") && !dominance_leq(&cq, &lq).expect("same length")
    })
}

pub fn lambda_properties() -> CriterionReport {
    let grid = lambda_grid();
    let mut t = par_merge(&grid, |(g, inv)| {
        let mut t = Tally::default();
        let label = || format!("{:?} nu={:?}", g.factors(), inv.nu());
        let lambda = match lambda_from_invariants(g, inv) {
            Ok(l) => l,
            Err(e) => {
                t.fail(|| format!("{}: {e}", label()));
                return t;
            }
        };
        t.bump("window", 1);
        t.check(check_lambda_window(&lambda, inv), || format!("{}: window fails", label()));
        for mode in [FunctorialityMode::Levi, FunctorialityMode::CentralQuotient] {
            t.bump("functoriality", 1);
            t.check(functoriality_check(g, inv, mode) == Ok(true), || {
                format!("{}: {mode:?} functoriality fails", label())
            });
        }
        if g.factors().len() == 1 && g.factors()[0].d == 1 && g.factors()[0].n <= 4 {
            t.bump("maximality", 1);
            let bad = maximality(&inv.nu()[0], inv.kappa()[0], &lambda.0[0]);
            t.check(bad.is_none(), || format!("{}: {bad:?} is not below lambda", label()));
        }
        t
    });
    for n in 1..=9i64 {
        for m in -2 * n..=2 * n {
            if num_integer::gcd(m, n) != 1 {
                continue;
            }
            t.bump("floor_formula", 1);
            let general = lambda_from_invariants(&GroupDatum::gl(n as usize), &SigmaInvariants::central(m, n as usize))
                .map(|l| l.0[0].clone());
            if m < 0 {
                // The floor formula is stated for m >= 0; shift by the centre.
                let shifted = lambda_superbasic_floor(m.rem_euclid(n), n).map(|v| {
                    let c = m.div_euclid(n);
                    v.into_iter().map(|x| x + c).collect::<Vec<_>>()
                });
                t.check(general.as_ref().ok() == shifted.as_ref().ok(), || {
                    format!("floor formula m={m} n={n}: {general:?} vs {shifted:?}")
                });
            } else {
                let floor = lambda_superbasic_floor(m, n);
                t.check(general.as_ref().ok() == floor.as_ref().ok(), || {
                    format!("floor formula m={m} n={n}: {general:?} vs {floor:?}")
                });
            }
        }
    }
    CriterionReport::new(6, "lambda window, floor formula, maximality, functoriality", t)
}

// ------------------------------------------------------------ criterion 7

/// The base alcove `v_1 > ... > v_n > v_1 - 1`.
fn in_base_alcove(v: &[Q]) -> bool {
    let one = Q::from_integer(1);
    v.windows(2).all(|w| w[0] > w[1]) && *v.last().expect("n >= 1") > v[0] - one
}

/// An interior point of the base alcove.
fn alcove_point(n: usize) -> Vec<Q> {
    (0..n).map(|i| Q::new((n - 1 - i) as i64, n as i64)).collect()
}

fn all_perms(n: usize) -> Vec<Vec<usize>> {
    let mut cur: Vec<usize> = (0..n).collect();
    let mut out = vec![cur.clone()];
    while crate::sweep::next_permutation(&mut cur) {
        out.push(cur.clone());
    }
    out
}

/// The unique element of total `k` mapping the base alcove to itself,
/// found by searching translations near `k/n`.
pub fn omega_by_alcove(n: usize, k: i64) -> Option<AffineWeylElt> {
    let p = alcove_point(n);
    let c = k.div_euclid(n as i64);
    let mut hits = Vec::new();
    for lambda in int_vectors(n, c - 1, c + 2, k) {
        for perm in all_perms(n) {
            let x = AffineWeylElt::new(lambda.clone(), perm).expect("valid");
            if in_base_alcove(&x.act(&p)) {
                hits.push(x);
            }
        }
    }
    (hits.len() == 1).then(|| hits.remove(0))
}

/// Affine simple reflections `s_1, ..., s_{n-1}, s_0 = t^{e_1 - e_n} s_θ`.
pub fn simple_reflections(n: usize) -> Vec<AffineWeylElt> {
    let mut out = Vec::new();
    for i in 0..n.saturating_sub(1) {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.swap(i, i + 1);
        out.push(AffineWeylElt::weyl(perm).expect("valid"));
    }
    if n >= 2 {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.swap(0, n - 1);
        let mut lambda = vec![0; n];
        lambda[0] = 1;
        lambda[n - 1] = -1;
        out.push(AffineWeylElt::new(lambda, perm).expect("valid"));
    }
    out
}

/// Word length in the affine Weyl group, by breadth-first search.
pub fn bfs_lengths(n: usize, max_len: u64) -> HashMap<AffineWeylElt, u64> {
    let gens = simple_reflections(n);
    let mut dist = HashMap::from([(AffineWeylElt::identity(n), 0u64)]);
    let mut queue = VecDeque::from([AffineWeylElt::identity(n)]);
    while let Some(x) = queue.pop_front() {
        let dx = dist[&x];
        if dx == max_len {
            continue;
        }
        for s in &gens {
            let y = x.compose(s).expect("same size");
            if !dist.contains_key(&y) {
                dist.insert(y.clone(), dx + 1);
                queue.push_back(y);
            }
        }
    }
    dist
}

fn length_oracle(t: &mut Tally, n: usize, max_len: u64) {
    let dist = bfs_lengths(n, max_len);
    let ni = n as i64;
    for k in -ni..=ni {
        let Some(omega) = omega_by_alcove(n, k) else {
            t.fail(|| format!("GL_{n}: no unique length-0 element of total {k}"));
            continue;
        };
        t.check(omega.length() == 0 && omega == basic_element(n, k), || {
            format!("GL_{n}: alcove stabiliser of total {k} is {omega:?}")
        });
        let mut seen = HashSet::new();
        for (w, &d) in &dist {
            let x = w.compose(&omega).expect("same size");
            t.bump("bfs_elements", 1);
            t.check(x.length() == d, || {
                format!("GL_{n}: length {} but BFS distance {d} for {x:?}", x.length())
            });
            t.check(omega.compose(w).expect("same size").length() == w.length(), || {
                format!("GL_{n}: left multiplication by Omega changes length of {w:?}")
            });
            seen.insert(x);
        }
        // Every element of length <= max_len with total k is reached.
        let bound = max_len as i64 + ni;
        let c = k.div_euclid(ni);
        for lambda in int_vectors(n, c - bound, c + bound, k) {
            for perm in all_perms(n) {
                let x = AffineWeylElt::new(lambda.clone(), perm).expect("valid");
                if x.length() <= max_len {
                    t.check(seen.contains(&x), || format!("GL_{n}: {x:?} missed by BFS"));
                }
            }
        }
    }
}

fn straight_consistency(t: &mut Tally, n: usize, bound: i64) {
    for lambda in (0..n).fold(vec![Vec::new()], |acc, _| {
        acc.into_iter()
            .flat_map(|v: Vec<i64>| {
                (-bound..=bound).map(move |x| {
                    let mut v = v.clone();
                    v.push(x);
                    v
                })
            })
            .collect()
    }) {
        for perm in all_perms(n) {
            let x = AffineWeylElt::new(lambda.clone(), perm).expect("valid");
            t.bump("straight_box", 1);
            t.check(x.straight_by_powers() == x.straight_by_newton(), || {
                format!("power test and Newton criterion disagree on {x:?}")
            });
        }
    }
}

pub fn affine_weyl_checks() -> CriterionReport {
    let mut t = Tally::default();
    for n in [2, 3] {
        length_oracle(&mut t, n, 6);
        straight_consistency(&mut t, n, 3);
    }
    let grid: Vec<(usize, Vec<Q>)> = [2usize, 3]
        .iter()
        .flat_map(|&n| newton_points(n, -2, 2, 3).into_iter().map(move |nu| (n, nu)))
        .collect();
    let t2 = par_merge(&grid, |(n, nu)| {
        let mut t = Tally::default();
        let inv = invariants_of(nu.clone());
        t.bump("prop_lambda", 1);
        t.check(verify_prop_lambda(*n, &inv) == Ok(true), || {
            format!("GL_{n} nu={nu:?}: translation of the straight element differs from lambda")
        });
        let bound = inv.kappa()[0].abs() + *n as i64;
        match search_straight(*n, &inv, bound, None) {
            Ok(found) => {
                let projections: BTreeSet<Vec<i64>> = found
                    .iter()
                    .map(|x| {
                        let mut v = x.translation().to_vec();
                        v.sort_unstable_by(|a, b| b.cmp(a));
                        v
                    })
                    .collect();
                t.check(projections.len() == 1, || {
                    format!("GL_{n} nu={nu:?}: straight projections {projections:?}")
                });
            }
            Err(e) => t.fail(|| format!("GL_{n} nu={nu:?}: {e}")),
        }
        t
    });
    CriterionReport::new(7, "affine Weyl length oracle, straight elements, lambda", t.merge(t2))
}

// ------------------------------------------------------------ criterion 8

/// Dominant minuscule `μ` for `Res_d GL_n`, one copy per entry of a weakly
/// decreasing tuple of ranks.
fn res_minuscules(n: usize, d: usize) -> Vec<CocharTuple> {
    let mut ranks = vec![Vec::new()];
    for _ in 0..d {
        ranks = ranks
            .into_iter()
            .flat_map(|r: Vec<usize>| {
                let cap = r.last().copied().unwrap_or(n);
                (0..=cap).map(move |k| {
                    let mut r = r.clone();
                    r.push(k);
                    r
                })
            })
            .collect();
    }
    ranks
        .into_iter()
        .map(|r| CocharTuple::single(r.into_iter().map(|k| minuscule(n, k, 0)).collect()))
        .collect()
}

pub fn counting_checks() -> CriterionReport {
    // Split: every class in B(G, μ) meets W.μ exactly once.
    let split_items: Vec<(usize, usize, i64)> = (1..=5usize)
        .flat_map(|n| (0..=n).flat_map(move |k| (-1..=1).map(move |a| (n, k, a))))
        .collect();
    let split = par_merge(&split_items, |&(n, k, a)| {
        let mut t = Tally::default();
        let g = GroupDatum::gl(n);
        let mu = CocharTuple::single(vec![minuscule(n, k, a)]);
        for nu in newton_points(n, a, a + 1, n as i64) {
            let inv = invariants_of(nu.clone());
            if inv.kappa()[0] != k as i64 + a * n as i64 || !in_b_g_mu(&g, &mu, &inv).unwrap_or(false) {
                continue;
            }
            let lambda = lambda_from_invariants(&g, &inv).expect("shapes match");
            let count = orbit_intersection_count(&g, &mu, &lambda, inv.kappa()).map(|c| c.count);
            t.bump("split", 1);
            t.check(count == Ok(1), || format!("GL_{n} mu={mu:?} nu={nu:?}: count {count:?}"));
        }
        t
    });

    // Orbit count against the weight-multiplicity oracle.
    let oracle_items: Vec<(usize, usize, CocharTuple)> = (1..=5usize)
        .flat_map(|n| (1..=3usize).map(move |d| (n, d)))
        .flat_map(|(n, d)| res_minuscules(n, d).into_iter().map(move |mu| (n, d, mu)))
        .collect();
    let oracle = par_merge(&oracle_items, |(n, d, mu)| {
        let mut t = Tally::default();
        let g = GroupDatum::res(*d, *n);
        let kappa: i64 = mu.restriction(0).iter().sum();
        for lambda in int_vectors(*n, 0, *d as i64, kappa) {
            let target = IntVector::single(lambda.clone());
            let count = orbit_intersection_count(&g, mu, &target, &[kappa]).map(|c| c.count);
            let mult = weight_multiplicity(&g, mu, &target);
            t.bump("oracle", 1);
            t.check(count.is_ok() && count == mult, || {
                format!("Res_{d} GL_{n} mu={mu:?} lambda={lambda:?}: {count:?} vs {mult:?}")
            });
        }
        t
    });

    // Levi reduction on GL_4 and on small Res factors.
    let levi_items: Vec<(usize, usize, CocharTuple)> = [(1usize, 4usize)]
        .into_iter()
        .chain((1..=3).flat_map(|d| (1..=3).map(move |n| (d, n))))
        .flat_map(|(d, n)| res_minuscules(n, d).into_iter().map(move |mu| (d, n, mu)))
        .collect();
    let levi = par_merge(&levi_items, |(d, n, mu)| {
        let mut t = Tally::default();
        let g = GroupDatum::res(*d, *n);
        let kappa: i64 = mu.restriction(0).iter().sum();
        for nu in newton_points(*n, 0, *d as i64, *n as i64) {
            let inv = invariants_of(nu.clone());
            if inv.kappa()[0] != kappa || !in_b_g_mu(&g, mu, &inv).unwrap_or(false) {
                continue;
            }
            let r = orbit_count_via_levi(&g, mu, &inv);
            t.bump("levi", 1);
            t.check(matches!(r, Ok((a, b)) if a == b), || {
                format!("Res_{d} GL_{n} mu={mu:?} nu={nu:?}: {r:?}")
            });
        }
        t
    });
    let mut example = Tally::default();
    let inv = SigmaInvariants::single(
        vec![Q::from_integer(1), Q::new(1, 3), Q::new(1, 3), Q::new(1, 3)],
        2,
    )
    .expect("valid");
    let r = orbit_count_via_levi(&GroupDatum::gl(4), &CocharTuple::single(vec![vec![1, 1, 0, 0]]), &inv);
    example.check(r == Ok((1, 1)), || format!("GL_4 (1,1,0,0) nu=(1,1/3,1/3,1/3): {r:?}"));

    let t = Tally::merge_all([split, oracle, levi, example, superbasic_top_cells()]);
    CriterionReport::new(8, "orbit counts: split, weight oracle, Levi reduction", t)
}

/// Superbasic classes: top cells match the orbit count and the largest
/// cell dimension matches the dimension formula.
fn superbasic_top_cells() -> Tally {
    let specs = chart_specs(2);
    par_merge(&specs, |spec| {
        let mut t = Tally::default();
        let (n, d, m) = (spec.n(), spec.d(), spec.m());
        let g = GroupDatum::res(d, n);
        let inv = SigmaInvariants::central(m, n);
        let lambda = lambda_from_invariants(&g, &inv).expect("shapes match").0[0].clone();
        let hodges: BTreeSet<TypeVector> = enumerate_p(spec, None)
            .expect("no hodge filter")
            .iter()
            .map(TypeVector::dominant)
            .filter(TypeVector::is_minuscule)
            .collect();
        for hodge in hodges {
            let mu = CocharTuple::single(hodge.rows().to_vec());
            let label = || format!("n={n} m_vec={:?} hodge={:?}", spec.m_vec(), hodge.rows());
            let table = match cell_table(spec, &hodge, &lambda) {
                Ok(tab) => tab,
                Err(e) => {
                    t.fail(|| format!("{}: {e}", label()));
                    continue;
                }
            };
            let count = orbit_intersection_count(&g, &mu, &IntVector::single(lambda.clone()), &[m])
                .map(|c| c.count);
            t.bump("superbasic", 1);
            t.check(count == Ok(table.top_count), || {
                format!("{}: top_count {} vs orbit count {count:?}", label(), table.top_count)
            });
            let dim = adlv_dimension(&g, &mu, &inv);
            t.check(dim.as_ref().ok() == table.max_dim().as_ref(), || {
                format!("{}: max cell dim {:?} vs {dim:?}", label(), table.max_dim())
            });
        }
        t
    })
}
