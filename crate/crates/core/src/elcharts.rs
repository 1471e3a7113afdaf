//! EL-charts over `d` copies of `Z`, their type and cotype, and the cell
//! table of the superbasic locus.
//!
//! Components and rows use two labellings. A chart stores minima per
//! *component* `c ∈ 0..d` (the copy of `Z` the element lives in). Type and
//! cotype vectors store entries per *row* `r ∈ 0..d`, where row `r` collects
//! walk positions `k = r + 1, r + 1 + d, ...` (1-based). Walk position `k`
//! lands in component `k mod d`, so row `r` describes component
//! `(r + 1) mod d`.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sweep::MultiWord;

/// Shape data of the map `f(a_(τ)) = a_(τ+1) + m_τ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FSpec {
    n: usize,
    m_vec: Vec<i64>,
}

impl FSpec {
    pub fn new(n: usize, m_vec: Vec<i64>) -> Result<Self> {
        if n == 0 || m_vec.is_empty() {
            return Err(Error::InvalidSpec("need n >= 1 and d >= 1".into()));
        }
        if m_vec.iter().any(|&m| m < 0) {
            return Err(Error::InvalidSpec("m_vec entries must be non-negative".into()));
        }
        let m: i64 = m_vec.iter().sum();
        if m.gcd(&(n as i64)) != 1 {
            return Err(Error::NotCoprime { m, n: n as i64 });
        }
        Ok(Self { n, m_vec })
    }

    /// Split case, `d = 1`.
    pub fn split(m: i64, n: usize) -> Result<Self> {
        Self::new(n, vec![m])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.m_vec.len()
    }

    pub fn m(&self) -> i64 {
        self.m_vec.iter().sum()
    }

    pub fn m_vec(&self) -> &[i64] {
        &self.m_vec
    }

    fn ni(&self) -> i64 {
        self.n as i64
    }

    /// Component of walk position `k` (0-based `k`, i.e. `b_k`).
    fn component_of(&self, k: usize) -> usize {
        k % self.d()
    }
}

/// An element of `(Z^n)^d`, indexed by row and position.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TypeVector {
    rows: Vec<Vec<i64>>,
}

impl TypeVector {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.first().map_or(0, Vec::len);
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidSpec("type rows must be non-empty and of equal length".into()));
        }
        Ok(Self { rows })
    }

    /// Builds from the walk-ordered sequence `μ'_1, ..., μ'_{nd}`.
    pub fn from_flat(d: usize, flat: &[i64]) -> Result<Self> {
        if d == 0 || flat.is_empty() || flat.len() % d != 0 {
            return Err(Error::InvalidSpec(format!(
                "flat type of length {} does not split into {d} rows",
                flat.len()
            )));
        }
        let rows = (0..d)
            .map(|r| flat[r..].iter().step_by(d).copied().collect())
            .collect();
        Self::new(rows)
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn d(&self) -> usize {
        self.rows.len()
    }

    pub fn n(&self) -> usize {
        self.rows[0].len()
    }

    /// Walk-ordered entries; position `k` (0-based) is row `k % d`,
    /// column `k / d`.
    pub fn flat(&self) -> Vec<i64> {
        let d = self.d();
        (0..d * self.n()).map(|k| self.rows[k % d][k / d]).collect()
    }

    fn at_flat(&self, k: usize) -> i64 {
        self.rows[k % self.d()][k / self.d()]
    }

    pub fn total(&self) -> i64 {
        self.rows.iter().flatten().sum()
    }

    /// Sum over rows: the image in the relative cocharacter lattice.
    pub fn restriction(&self) -> Vec<i64> {
        (0..self.n())
            .map(|i| self.rows.iter().map(|r| r[i]).sum())
            .collect()
    }

    /// Each row sorted weakly decreasing.
    pub fn dominant(&self) -> TypeVector {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut r = r.clone();
                r.sort_unstable_by(|a, b| b.cmp(a));
                r
            })
            .collect();
        TypeVector { rows }
    }

    /// Each row sorted weakly increasing.
    pub fn antidominant(&self) -> TypeVector {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut r = r.clone();
                r.sort_unstable();
                r
            })
            .collect();
        TypeVector { rows }
    }

    pub fn is_dominant(&self) -> bool {
        self.rows.iter().all(|r| r.windows(2).all(|w| w[0] >= w[1]))
    }

    pub fn is_minuscule(&self) -> bool {
        self.rows.iter().flatten().all(|&x| x == 0 || x == 1)
    }
}

/// Membership in `P_{m,n,d}`: non-negative entries whose restriction is
/// dominated by the constant vector `m/n`.
pub fn is_in_p(t: &TypeVector, spec: &FSpec) -> bool {
    if t.d() != spec.d() || t.n() != spec.n() || t.rows.iter().flatten().any(|&x| x < 0) {
        return false;
    }
    let restr = t.restriction();
    let n = spec.ni();
    let m = spec.m();
    let mut partial = 0;
    for (k, x) in restr.iter().enumerate() {
        partial += x;
        if n * partial > (k as i64 + 1) * m {
            return false;
        }
    }
    partial == m
}

/// A subset `A` of `d` copies of `Z`, stable under `+n` and `f`, encoded by
/// the least element of each residue class in each component.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ElChart {
    spec: FSpec,
    minima: Vec<Vec<i64>>,
}

/// The generator walk `b_1, ..., b_{nd}` of a chart, with the type.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeWalk {
    pub type_vector: TypeVector,
    /// `(component, value)` of `b_k` for `k = 1..nd`; `b_{nd} = b_0`.
    pub b_sequence: Vec<(usize, i64)>,
}

impl ElChart {
    pub fn new(spec: FSpec, minima: Vec<Vec<i64>>) -> Result<Self> {
        let n = spec.n();
        if minima.len() != spec.d() || minima.iter().any(|c| c.len() != n) {
            return Err(Error::InvalidChart(format!(
                "expected {} components of {n} minima",
                spec.d()
            )));
        }
        let ni = spec.ni();
        for (c, comp) in minima.iter().enumerate() {
            for (r, &x) in comp.iter().enumerate() {
                if x.rem_euclid(ni) != r as i64 {
                    return Err(Error::InvalidChart(format!(
                        "minima[{c}][{r}] = {x} is not congruent to {r} mod {n}"
                    )));
                }
            }
        }
        let chart = Self { spec, minima };
        if let Some((c, r)) = chart.f_violation() {
            return Err(Error::InvalidChart(format!(
                "not stable under f at component {c}, residue {r}"
            )));
        }
        Ok(chart)
    }

    fn f_violation(&self) -> Option<(usize, usize)> {
        let d = self.spec.d();
        let ni = self.spec.ni();
        for c in 0..d {
            let mc = self.spec.m_vec[c];
            for r in 0..self.spec.n() {
                let image = self.minima[c][r] + mc;
                let target = self.minima[(c + 1) % d][image.rem_euclid(ni) as usize];
                if target > image {
                    return Some((c, r));
                }
            }
        }
        None
    }

    pub fn spec(&self) -> &FSpec {
        &self.spec
    }

    pub fn minima(&self) -> &[Vec<i64>] {
        &self.minima
    }

    /// `min A_(c)` of the residue class of `x`.
    fn min_in_class(&self, c: usize, x: i64) -> i64 {
        self.minima[c][x.rem_euclid(self.spec.ni()) as usize]
    }

    /// `B_(c) = A_(c) \ (A_(c) + n)`; this is exactly the set of minima.
    pub fn generators(&self, c: usize) -> Vec<i64> {
        self.minima[c].clone()
    }

    pub fn contains(&self, c: usize, x: i64) -> bool {
        x >= self.min_in_class(c, x)
    }

    pub fn shifted(&self, z: i64) -> ElChart {
        let ni = self.spec.ni();
        let n = self.spec.n();
        let minima = self
            .minima
            .iter()
            .map(|comp| {
                let mut out = vec![0; n];
                for &x in comp {
                    out[(x + z).rem_euclid(ni) as usize] = x + z;
                }
                out
            })
            .collect();
        ElChart {
            spec: self.spec.clone(),
            minima,
        }
    }

    fn normalizing_shift(&self) -> i64 {
        let n = self.spec.ni();
        let sum: i64 = self.minima[0].iter().sum();
        let target = n * (n - 1) / 2;
        debug_assert_eq!((target - sum).rem_euclid(n), 0);
        (target - sum) / n
    }

    pub fn is_normalized(&self) -> bool {
        self.normalizing_shift() == 0
    }

    /// The unique equivalent chart with `Σ B_(0) = n(n-1)/2`.
    pub fn normalized(&self) -> ElChart {
        self.shifted(self.normalizing_shift())
    }

    /// `A + n ⊂ f(A)`.
    pub fn is_small(&self) -> bool {
        let d = self.spec.d();
        (0..d).all(|c| {
            let prev = (c + d - 1) % d;
            let mp = self.spec.m_vec[prev];
            self.minima[c]
                .iter()
                .all(|&x| x + self.spec.ni() - mp >= self.min_in_class(prev, x - mp))
        })
    }

    /// Walks `b_{k+1} = f(b_k) - μ'_{k+1} n` starting from `min B_(0)`.
    pub fn type_walk(&self) -> TypeWalk {
        let spec = &self.spec;
        let d = spec.d();
        let nd = d * spec.n();
        let b0 = *self.minima[0].iter().min().expect("n >= 1");
        let mut b = b0;
        let mut flat = Vec::with_capacity(nd);
        let mut seq = Vec::with_capacity(nd);
        for k in 0..nd {
            let c = spec.component_of(k);
            let image = b + spec.m_vec[c];
            let next_c = (c + 1) % d;
            let next = self.min_in_class(next_c, image);
            let step = image - next;
            debug_assert!(step >= 0 && step % spec.ni() == 0);
            flat.push(step / spec.ni());
            seq.push((next_c, next));
            b = next;
        }
        debug_assert_eq!(b, b0);
        TypeWalk {
            type_vector: TypeVector::from_flat(d, &flat).expect("nd entries"),
            b_sequence: seq,
        }
    }

    pub fn chart_type(&self) -> TypeVector {
        self.type_walk().type_vector
    }

    /// Reads the type in order of decreasing generators, per row.
    pub fn cotype(&self) -> TypeVector {
        let walk = self.type_walk();
        let d = self.spec.d();
        let rows = (0..d)
            .map(|r| {
                let mut entries: Vec<(i64, i64)> = (r..walk.b_sequence.len())
                    .step_by(d)
                    .map(|k| (walk.b_sequence[k].1, walk.type_vector.at_flat(k)))
                    .collect();
                entries.sort_unstable_by(|a, b| b.0.cmp(&a.0));
                entries.into_iter().map(|(_, t)| t).collect()
            })
            .collect();
        TypeVector { rows }
    }

    /// `#V_A`: pairs of generators `b_i < b_j` in one component whose
    /// outgoing steps satisfy `μ'_{i+1} = μ'_{j+1} + 1`. Indices are
    /// unrestricted. For minuscule types this equals the cell dimension
    /// computed from the cotype.
    pub fn va_count(&self) -> usize {
        let walk = self.type_walk();
        let steps = walk.type_vector.flat();
        let nd = steps.len();
        // b_sequence[k] is b_{k+1}; the source of step k is b_k.
        let source = |k: usize| walk.b_sequence[(k + nd - 1) % nd];
        let mut count = 0;
        for i in 0..nd {
            let (ci, bi) = source(i);
            for j in 0..nd {
                let (cj, bj) = source(j);
                if ci == cj && bi < bj && steps[i] == steps[j] + 1 {
                    count += 1;
                }
            }
        }
        count
    }
}

/// Rebuilds the normalized chart of type `t` from the walk starting at 0.
pub fn chart_from_type(t: &TypeVector, spec: &FSpec) -> Result<ElChart> {
    if !is_in_p(t, spec) {
        return Err(Error::NotAType(format!("{:?} is not in P_{{m,n,d}}", t.rows)));
    }
    let d = spec.d();
    let n = spec.n();
    let ni = spec.ni();
    let mut minima = vec![vec![i64::MIN; n]; d];
    let mut b = 0i64;
    for k in 0..d * n {
        let c = spec.component_of(k);
        b += spec.m_vec[c] - t.at_flat(k) * ni;
        let next_c = (c + 1) % d;
        let slot = &mut minima[next_c][b.rem_euclid(ni) as usize];
        if *slot != i64::MIN {
            return Err(Error::NotAType("walk revisits a residue class".into()));
        }
        *slot = b;
    }
    let chart = ElChart::new(spec.clone(), minima).map_err(|e| Error::NotAType(e.to_string()))?;
    Ok(chart.normalized())
}

/// Walk word of a type: letter `k` is `m_c - μ'_k n` where `c` is the
/// component the walk leaves at step `k`. Its levels are the walk
/// generators `b_k - b_0`.
pub fn type_word(t: &TypeVector, spec: &FSpec) -> MultiWord {
    let d = spec.d();
    let letters = t
        .flat()
        .iter()
        .enumerate()
        .map(|(k, &x)| spec.m_vec[spec.component_of(k)] - x * spec.ni())
        .collect();
    MultiWord::new(d, spec.n(), letters).expect("type has nd entries")
}

/// The sweep-map route from type to cotype.
pub fn zeta(t: &TypeVector, spec: &FSpec) -> Result<TypeVector> {
    if !is_in_p(t, spec) {
        return Err(Error::NotAType(format!("{:?} is not in P_{{m,n,d}}", t.rows)));
    }
    let swept = type_word(t, spec).sweep();
    let d = spec.d();
    let flat: Vec<i64> = swept
        .letters()
        .iter()
        .enumerate()
        .map(|(k, &w)| {
            let diff = spec.m_vec[spec.component_of(k)] - w;
            debug_assert_eq!(diff % spec.ni(), 0);
            diff / spec.ni()
        })
        .collect();
    TypeVector::from_flat(d, &flat)
}

/// All of `P_{m,n,d}` (or `P_μ` when `hodge` is given), in lexicographic
/// order of the walk-ordered entries.
pub fn enumerate_p(spec: &FSpec, hodge: Option<&TypeVector>) -> Result<Vec<TypeVector>> {
    let d = spec.d();
    let n = spec.n();
    let remaining: Option<Vec<Vec<i64>>> = match hodge {
        Some(h) => {
            if h.d() != d || h.n() != n || !h.is_dominant() {
                return Err(Error::InvalidSpec(
                    "hodge point must be dominant and shaped like the type".into(),
                ));
            }
            if h.total() != spec.m() {
                return Ok(Vec::new());
            }
            Some(h.rows.clone())
        }
        None => None,
    };
    let mut out = Vec::new();
    let mut flat = vec![0i64; n * d];
    enumerate_rec(spec, 0, 0, &mut flat, remaining, &mut out);
    Ok(out
        .into_iter()
        .map(|f| TypeVector::from_flat(d, &f).expect("nd entries"))
        .collect())
}

fn enumerate_rec(
    spec: &FSpec,
    k: usize,
    partial: i64,
    flat: &mut Vec<i64>,
    remaining: Option<Vec<Vec<i64>>>,
    out: &mut Vec<Vec<i64>>,
) {
    let d = spec.d();
    let nd = flat.len();
    let m = spec.m();
    if k == nd {
        if partial == m {
            out.push(flat.clone());
        }
        return;
    }
    let row = k % d;
    let candidates: Vec<i64> = match &remaining {
        Some(rem) => {
            let mut c = rem[row].clone();
            c.sort_unstable();
            c.dedup();
            c
        }
        None => (0..=m - partial).collect(),
    };
    for x in candidates {
        let next = partial + x;
        if next > m {
            break;
        }
        // Dominance is checked at the end of each block of d positions.
        if (k + 1) % d == 0 && spec.ni() * next > ((k + 1) / d) as i64 * m {
            continue;
        }
        flat[k] = x;
        let rem_next = remaining.as_ref().map(|rem| {
            let mut rem = rem.clone();
            let pos = rem[row].iter().position(|&y| y == x).expect("candidate drawn from row");
            rem[row].remove(pos);
            rem
        });
        enumerate_rec(spec, k + 1, next, flat, rem_next, out);
    }
}

/// `Σ_j ⌊⟨cotype|_Ŝ - μ_adom, ω_j⟩⌋` over the `n - 1` fundamental coweights.
pub fn cell_dimension(cotype: &TypeVector, hodge: &TypeVector, spec: &FSpec) -> Result<i64> {
    if cotype.d() != spec.d() || cotype.n() != spec.n() || hodge.d() != spec.d() || hodge.n() != spec.n() {
        return Err(Error::InvalidSpec("cotype and hodge must match the spec shape".into()));
    }
    let diff: Vec<i64> = cotype
        .restriction()
        .iter()
        .zip(hodge.antidominant().restriction())
        .map(|(a, b)| a - b)
        .collect();
    let n = spec.ni();
    let total: i64 = diff.iter().sum();
    let mut partial = 0;
    let mut dim = 0;
    for (j, x) in diff.iter().enumerate().take(spec.n() - 1) {
        partial += x;
        let j = j as i64 + 1;
        dim += Integer::div_floor(&(n * partial - j * total), &n);
    }
    Ok(dim)
}

/// One cell of the superbasic decomposition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellRecord {
    pub chart: ElChart,
    #[serde(rename = "type")]
    pub type_vector: TypeVector,
    pub cotype: TypeVector,
    pub dim: i64,
    pub top: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellTable {
    pub cells: Vec<CellRecord>,
    /// `poincare[i]` cells of dimension `i`.
    pub poincare: Vec<u64>,
    pub top_count: u64,
}

impl CellTable {
    pub fn max_dim(&self) -> Option<i64> {
        self.cells.iter().map(|c| c.dim).max()
    }
}

/// Cells indexed by `P_μ`, with dimensions and top-dimensional flags.
pub fn cell_table(spec: &FSpec, hodge: &TypeVector, lambda: &[i64]) -> Result<CellTable> {
    if !hodge.is_minuscule() {
        return Err(Error::NotMinuscule);
    }
    if lambda.len() != spec.n() {
        return Err(Error::LambdaMismatch(format!(
            "lambda has length {}, expected {}",
            lambda.len(),
            spec.n()
        )));
    }
    let total: i64 = lambda.iter().sum();
    if total != spec.m() {
        return Err(Error::LambdaMismatch(format!(
            "lambda total {total} differs from m = {}",
            spec.m()
        )));
    }
    let types = enumerate_p(spec, Some(hodge))?;
    let mut cells = Vec::with_capacity(types.len());
    for t in types {
        let chart = chart_from_type(&t, spec)?;
        let cotype = chart.cotype();
        let dim = cell_dimension(&cotype, hodge, spec)?;
        let top = cotype.restriction() == lambda;
        cells.push(CellRecord {
            chart,
            type_vector: t,
            cotype,
            dim,
            top,
        });
    }
    let max = cells.iter().map(|c| c.dim).max().unwrap_or(0);
    let mut poincare = vec![0u64; max.max(0) as usize + 1];
    for c in &cells {
        poincare[c.dim as usize] += 1;
    }
    let top_count = cells.iter().filter(|c| c.top).count() as u64;
    Ok(CellTable {
        cells,
        poincare,
        top_count,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tv(rows: &[&[i64]]) -> TypeVector {
        TypeVector::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn n0(spec: &FSpec) -> ElChart {
        let minima = vec![(0..spec.n() as i64).collect()];
        ElChart::new(spec.clone(), minima).unwrap()
    }

    #[test]
    fn worked_example_type_and_walk() {
        let spec = FSpec::split(5, 7).unwrap();
        let walk = n0(&spec).type_walk();
        assert_eq!(walk.type_vector.flat(), vec![0, 1, 1, 0, 1, 1, 1]);
        let b: Vec<i64> = walk.b_sequence.iter().map(|x| x.1).collect();
        assert_eq!(b, vec![5, 3, 1, 6, 4, 2, 0]);
    }

    #[test]
    fn small_split_type() {
        let spec = FSpec::split(1, 2).unwrap();
        assert_eq!(n0(&spec).chart_type().flat(), vec![0, 1]);
        assert_eq!(n0(&spec).cotype().flat(), vec![0, 1]);
    }

    #[test]
    fn worked_example_cotype() {
        let spec = FSpec::split(5, 7).unwrap();
        assert_eq!(n0(&spec).cotype().flat(), vec![0, 0, 1, 1, 1, 1, 1]);
    }

    #[test]
    fn cotype_equals_type_for_decreasing_walk() {
        // m = 1: the walk over N_0 is n-1, n-2, ..., 0 already decreasing.
        let spec = FSpec::split(1, 5).unwrap();
        let chart = n0(&spec);
        assert_eq!(chart.cotype(), chart.chart_type());
    }

    #[test]
    fn from_type_examples() {
        let spec = FSpec::split(5, 7).unwrap();
        let chart = chart_from_type(&tv(&[&[0, 1, 1, 0, 1, 1, 1]]), &spec).unwrap();
        assert_eq!(chart.minima()[0], vec![0, 1, 2, 3, 4, 5, 6]);
        let spec = FSpec::split(1, 2).unwrap();
        let chart = chart_from_type(&tv(&[&[0, 1]]), &spec).unwrap();
        assert_eq!(chart.minima()[0], vec![0, 1]);
    }

    #[test]
    fn from_type_rejects_non_types() {
        let spec = FSpec::split(1, 2).unwrap();
        assert!(matches!(chart_from_type(&tv(&[&[1, 0]]), &spec), Err(Error::NotAType(_))));
        assert!(matches!(zeta(&tv(&[&[1, 0]]), &spec), Err(Error::NotAType(_))));
    }

    #[test]
    fn zeta_examples() {
        let spec = FSpec::split(5, 7).unwrap();
        assert_eq!(
            zeta(&tv(&[&[0, 1, 1, 0, 1, 1, 1]]), &spec).unwrap().flat(),
            vec![0, 0, 1, 1, 1, 1, 1]
        );
        let spec = FSpec::split(1, 2).unwrap();
        assert_eq!(zeta(&tv(&[&[0, 1]]), &spec).unwrap().flat(), vec![0, 1]);
    }

    #[test]
    fn type_word_of_worked_example() {
        let spec = FSpec::split(5, 7).unwrap();
        let w = type_word(&tv(&[&[0, 1, 1, 0, 1, 1, 1]]), &spec);
        assert_eq!(w.letters(), &[5, -2, -2, 5, -2, -2, -2]);
    }

    #[test]
    fn enumerate_examples() {
        let spec = FSpec::split(1, 2).unwrap();
        let all = enumerate_p(&spec, None).unwrap();
        assert_eq!(all, vec![tv(&[&[0, 1]])]);

        let spec = FSpec::split(5, 7).unwrap();
        let p = enumerate_p(&spec, Some(&tv(&[&[1, 1, 1, 1, 1, 0, 0]]))).unwrap();
        let flats: Vec<_> = p.iter().map(TypeVector::flat).collect();
        assert_eq!(
            flats,
            vec![
                vec![0, 0, 1, 1, 1, 1, 1],
                vec![0, 1, 0, 1, 1, 1, 1],
                vec![0, 1, 1, 0, 1, 1, 1],
            ]
        );

        let spec = FSpec::new(3, vec![1, 1]).unwrap();
        let p = enumerate_p(&spec, Some(&tv(&[&[1, 0, 0], &[1, 0, 0]]))).unwrap();
        let mut rows: Vec<_> = p.iter().map(|t| t.rows().to_vec()).collect();
        rows.sort();
        assert_eq!(
            rows,
            vec![
                vec![vec![0, 0, 1], vec![0, 0, 1]],
                vec![vec![0, 0, 1], vec![0, 1, 0]],
                vec![vec![0, 1, 0], vec![0, 0, 1]],
            ]
        );
    }

    #[test]
    fn enumerate_rejects_non_dominant_hodge() {
        let spec = FSpec::split(1, 2).unwrap();
        assert!(enumerate_p(&spec, Some(&tv(&[&[0, 1]]))).is_err());
    }

    #[test]
    fn cell_dimension_examples() {
        let spec = FSpec::split(5, 7).unwrap();
        let hodge = tv(&[&[1, 1, 1, 1, 1, 0, 0]]);
        assert_eq!(cell_dimension(&tv(&[&[0, 1, 1, 0, 1, 1, 1]]), &hodge, &spec).unwrap(), 2);
        assert_eq!(cell_dimension(&hodge.antidominant(), &hodge, &spec).unwrap(), 0);
        let spec = FSpec::new(3, vec![1, 1]).unwrap();
        let hodge = tv(&[&[1, 0, 0], &[1, 0, 0]]);
        assert_eq!(cell_dimension(&tv(&[&[0, 1, 0], &[0, 0, 1]]), &hodge, &spec).unwrap(), 1);
    }

    #[test]
    fn va_count_examples() {
        let spec = FSpec::split(5, 7).unwrap();
        // N_0 has antidominant cotype.
        assert_eq!(n0(&spec).va_count(), 0);
        let hodge = tv(&[&[1, 1, 1, 1, 1, 0, 0]]);
        let top = enumerate_p(&spec, Some(&hodge))
            .unwrap()
            .into_iter()
            .map(|t| chart_from_type(&t, &spec).unwrap())
            .find(|c| c.cotype().flat() == vec![0, 1, 1, 0, 1, 1, 1])
            .unwrap();
        assert_eq!(top.va_count(), 2);
        let spec = FSpec::split(1, 2).unwrap();
        assert_eq!(n0(&spec).va_count(), 0);
    }

    #[test]
    fn cell_table_worked_example() {
        let spec = FSpec::split(5, 7).unwrap();
        let hodge = tv(&[&[1, 1, 1, 1, 1, 0, 0]]);
        let table = cell_table(&spec, &hodge, &[0, 1, 1, 0, 1, 1, 1]).unwrap();
        assert_eq!(table.cells.len(), 3);
        assert_eq!(table.poincare, vec![1, 1, 1]);
        assert_eq!(table.top_count, 1);
    }

    #[test]
    fn cell_table_res_example() {
        let spec = FSpec::new(3, vec![1, 1]).unwrap();
        let hodge = tv(&[&[1, 0, 0], &[1, 0, 0]]);
        let table = cell_table(&spec, &hodge, &[0, 1, 1]).unwrap();
        let mut dims: Vec<i64> = table.cells.iter().map(|c| c.dim).collect();
        dims.sort_unstable();
        assert_eq!(dims, vec![0, 1, 1]);
        assert_eq!(table.top_count, 2);
    }

    #[test]
    fn cell_table_single_cell() {
        let spec = FSpec::split(1, 3).unwrap();
        let table = cell_table(&spec, &tv(&[&[1, 0, 0]]), &[0, 0, 1]).unwrap();
        assert_eq!(table.cells.len(), 1);
        assert_eq!(table.cells[0].dim, 0);
        assert_eq!(table.top_count, 1);
    }

    #[test]
    fn cell_table_rejects_bad_lambda() {
        let spec = FSpec::split(1, 3).unwrap();
        let hodge = tv(&[&[1, 0, 0]]);
        assert!(matches!(cell_table(&spec, &hodge, &[0, 1, 1]), Err(Error::LambdaMismatch(_))));
        assert!(matches!(cell_table(&spec, &hodge, &[1]), Err(Error::LambdaMismatch(_))));
    }

    #[test]
    fn chart_validation() {
        let spec = FSpec::split(5, 7).unwrap();
        assert!(ElChart::new(spec.clone(), vec![vec![0, 1, 2, 3, 4, 5, 13]]).is_err());
        assert!(ElChart::new(spec.clone(), vec![vec![0, 1, 2, 3, 4, 5, 7]]).is_err());
        assert!(FSpec::split(2, 4).is_err());
    }

    #[test]
    fn normalization() {
        let spec = FSpec::split(5, 7).unwrap();
        let chart = n0(&spec);
        assert!(chart.is_normalized());
        let moved = chart.shifted(-3);
        assert!(!moved.is_normalized());
        assert_eq!(moved.normalized(), chart);
        assert_eq!(moved.chart_type(), chart.chart_type());
    }
}
