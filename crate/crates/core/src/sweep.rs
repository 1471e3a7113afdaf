//! Words, levels and the multi-component sweep map.
//!
//! A [`MultiWord`] of `d` components with `n` letters each is stored flat.
//! Flat index `k` (0-based) belongs to component `k % d` and is the
//! `k / d`-th letter of that component, so component `τ` reads
//! `w[τ], w[τ + d], ..., w[τ + (n - 1) d]`.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MultiWord {
    d: usize,
    n: usize,
    letters: Vec<i64>,
}

impl MultiWord {
    pub fn new(d: usize, n: usize, letters: Vec<i64>) -> Result<Self> {
        if d == 0 || n == 0 || letters.len() != n * d {
            return Err(Error::WordShape {
                got: letters.len(),
                expected: n * d,
                n,
                d,
            });
        }
        Ok(Self { d, n, letters })
    }

    /// Single-component (classical) word.
    pub fn classical(letters: Vec<i64>) -> Result<Self> {
        let n = letters.len();
        Self::new(1, n, letters)
    }

    /// Interleaves `components` (all of equal length) into one word.
    pub fn from_components(components: &[Vec<i64>]) -> Result<Self> {
        let d = components.len();
        let n = components.first().map_or(0, Vec::len);
        if components.iter().any(|c| c.len() != n) {
            return Err(Error::InvalidSpec("components of unequal length".into()));
        }
        let mut letters = vec![0; n * d];
        for (tau, comp) in components.iter().enumerate() {
            for (i, &a) in comp.iter().enumerate() {
                letters[tau + i * d] = a;
            }
        }
        Self::new(d, n, letters)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[i64] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<i64> {
        self.letters
    }

    pub fn component(&self, tau: usize) -> Vec<i64> {
        self.letters[tau..].iter().step_by(self.d).copied().collect()
    }

    pub fn components(&self) -> Vec<Vec<i64>> {
        (0..self.d).map(|tau| self.component(tau)).collect()
    }

    /// Running sums `w_1 + ... + w_k` for `k = 1..nd`.
    pub fn levels(&self) -> Vec<i64> {
        self.letters
            .iter()
            .scan(0i64, |acc, &w| {
                *acc += w;
                Some(*acc)
            })
            .collect()
    }

    /// Levels at flat positions divisible by `d` are all non-negative.
    pub fn is_dyck(&self) -> bool {
        self.levels()
            .iter()
            .skip(self.d - 1)
            .step_by(self.d)
            .all(|&l| l >= 0)
    }

    /// The multi-component sweep map.
    ///
    /// Each component is reordered by level, highest first, with letters of
    /// equal level read right to left. In the last component (flat positions
    /// divisible by `d`) letters of negative level come first, from -1
    /// downwards, exactly as in the classical sweep map. For `d = 1` this is
    /// the classical sweep map.
    ///
    /// This is the per-component pullback of the classical sweep of
    /// [`MultiWord::shift_embed`]: after the shift only positions divisible
    /// by `d` can have negative level.
    pub fn sweep(&self) -> MultiWord {
        self.sweep_by(|tau| tau == self.d - 1)
    }

    /// Variant that emits negative levels first in every component.
    /// Agrees with [`MultiWord::sweep`] for `d = 1`; for `d > 1` it neither
    /// preserves Dyck words nor matches the cotype.
    pub fn sweep_literal(&self) -> MultiWord {
        self.sweep_by(|_| true)
    }

    fn sweep_by(&self, split_sign: impl Fn(usize) -> bool) -> MultiWord {
        let levels = self.levels();
        let mut out = vec![0; self.letters.len()];
        for tau in 0..self.d {
            let mut positions: Vec<usize> = (tau..self.letters.len()).step_by(self.d).collect();
            let split = split_sign(tau);
            positions.sort_by_key(|&k| {
                let l = levels[k];
                (!split || l >= 0, std::cmp::Reverse(l), std::cmp::Reverse(k))
            });
            for (i, k) in positions.into_iter().enumerate() {
                out[tau + i * self.d] = self.letters[k];
            }
        }
        MultiWord {
            d: self.d,
            n: self.n,
            letters: out,
        }
    }

    pub fn alphabet(&self) -> Alphabet {
        Alphabet::new(self.components()).expect("components of a word have equal length")
    }

    /// The shifted single-component word `w^{+N}`: letters in positions
    /// `k ≢ 0 (mod d)` (1-based) gain `N`, letters at multiples of `d` lose
    /// `N (d - 1)`. Levels shift by `(k mod d) · N`.
    pub fn shift_embed(&self, shift: i64) -> MultiWord {
        let d = self.d as i64;
        let letters = self
            .letters
            .iter()
            .enumerate()
            .map(|(k0, &a)| {
                if (k0 + 1) % self.d == 0 {
                    a - shift * (d - 1)
                } else {
                    a + shift
                }
            })
            .collect();
        MultiWord {
            d: 1,
            n: self.letters.len(),
            letters,
        }
    }
}

/// Per-component multisets defining a rearrangement class.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Alphabet {
    /// Sorted ascending.
    multisets: Vec<Vec<i64>>,
}

impl Alphabet {
    pub fn new(mut multisets: Vec<Vec<i64>>) -> Result<Self> {
        let n = multisets.first().map_or(0, Vec::len);
        if n == 0 || multisets.iter().any(|c| c.len() != n) {
            return Err(Error::InvalidSpec(
                "alphabet needs d >= 1 non-empty components of equal size".into(),
            ));
        }
        for c in &mut multisets {
            c.sort_unstable();
        }
        Ok(Self { multisets })
    }

    pub fn d(&self) -> usize {
        self.multisets.len()
    }

    pub fn n(&self) -> usize {
        self.multisets[0].len()
    }

    pub fn multisets(&self) -> &[Vec<i64>] {
        &self.multisets
    }

    pub fn contains(&self, w: &MultiWord) -> bool {
        w.d() == self.d()
            && w.n() == self.n()
            && (0..self.d()).all(|tau| {
                let mut c = w.component(tau);
                c.sort_unstable();
                c == self.multisets[tau]
            })
    }

    /// Number of words in the class (product of multinomials).
    pub fn class_size(&self) -> u128 {
        self.multisets.iter().map(|c| multinomial(c)).product()
    }

    /// All distinct rearrangements of one component, lexicographically.
    pub fn arrangements(&self, tau: usize) -> Vec<Vec<i64>> {
        let mut cur = self.multisets[tau].clone();
        let mut out = vec![cur.clone()];
        while next_permutation(&mut cur) {
            out.push(cur.clone());
        }
        out
    }

    /// Every word of the class, ordered lexicographically by component
    /// tuple (component 0 most significant).
    pub fn words(&self) -> impl Iterator<Item = MultiWord> + '_ {
        let per: Vec<Vec<Vec<i64>>> = (0..self.d()).map(|t| self.arrangements(t)).collect();
        ClassIter::new(per)
    }

    /// The words whose component 0 equals `first`. Partitions of the class
    /// by the first component are disjoint and can be processed in parallel.
    pub fn words_with_first(&self, first: Vec<i64>) -> impl Iterator<Item = MultiWord> {
        let mut per: Vec<Vec<Vec<i64>>> = vec![vec![first]];
        per.extend((1..self.d()).map(|t| self.arrangements(t)));
        ClassIter::new(per)
    }

    /// Bound `N` for [`MultiWord::shift_embed`] valid on the whole class:
    /// twice the largest possible absolute level, plus one.
    pub fn default_shift(&self) -> i64 {
        let max_abs = self
            .multisets
            .iter()
            .flatten()
            .map(|a| a.abs())
            .max()
            .unwrap_or(0);
        1 + 2 * max_abs * (self.n() * self.d()) as i64
    }

    /// Checks the separation and positivity bounds for a shift on every
    /// member of the class.
    pub fn check_shift(&self, shift: i64) -> Result<()> {
        let d = self.d();
        for w in self.words() {
            let l = w.levels();
            let resid_levels = |r: usize| l.iter().enumerate().filter(move |(k0, _)| (k0 + 1) % d == r).map(|(_, &x)| x);
            for tau in 1..d {
                let min_tau = resid_levels(tau).min().unwrap_or(0);
                let max_prev = resid_levels(tau - 1).max().unwrap_or(0);
                if min_tau + shift <= max_prev || min_tau + tau as i64 * shift < 0 {
                    return Err(Error::BadN(shift));
                }
            }
        }
        Ok(())
    }
}

struct ClassIter {
    per: Vec<Vec<Vec<i64>>>,
    idx: Vec<usize>,
    done: bool,
}

impl ClassIter {
    fn new(per: Vec<Vec<Vec<i64>>>) -> Self {
        let done = per.iter().any(Vec::is_empty);
        let idx = vec![0; per.len()];
        Self { per, idx, done }
    }
}

impl Iterator for ClassIter {
    type Item = MultiWord;

    fn next(&mut self) -> Option<MultiWord> {
        if self.done {
            return None;
        }
        let comps: Vec<Vec<i64>> = self
            .idx
            .iter()
            .zip(&self.per)
            .map(|(&i, arr)| arr[i].clone())
            .collect();
        let mut pos = self.idx.len();
        loop {
            if pos == 0 {
                self.done = true;
                break;
            }
            pos -= 1;
            self.idx[pos] += 1;
            if self.idx[pos] < self.per[pos].len() {
                break;
            }
            self.idx[pos] = 0;
        }
        Some(MultiWord::from_components(&comps).expect("arrangements share a length"))
    }
}

/// Rearranges `v` into the next lexicographic permutation; false when `v`
/// was already the last one.
pub fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn multinomial(sorted: &[i64]) -> u128 {
    let mut result: u128 = 1;
    let mut placed: u128 = 0;
    let mut i = 0;
    while i < sorted.len() {
        let mut j = i;
        while j < sorted.len() && sorted[j] == sorted[i] {
            j += 1;
        }
        for r in 1..=(j - i) as u128 {
            placed += 1;
            result = result * placed / r;
        }
        i = j;
    }
    result
}

/// Inverts the sweep map on one rearrangement class by tabulating forward
/// images.
pub struct SweepInverter {
    alphabet: Alphabet,
    table: HashMap<Vec<i64>, Vec<i64>>,
}

impl SweepInverter {
    pub fn new(alphabet: Alphabet) -> Self {
        let table = alphabet
            .words()
            .map(|w| (w.sweep().into_letters(), w.into_letters()))
            .collect();
        Self { alphabet, table }
    }

    pub fn invert(&self, w: &MultiWord) -> Result<MultiWord> {
        if !self.alphabet.contains(w) {
            return Err(Error::NotInAlphabet);
        }
        let pre = self.table.get(w.letters()).ok_or(Error::NotInImage)?;
        MultiWord::new(w.d(), w.n(), pre.clone())
    }

    /// Number of distinct sweep images seen while tabulating.
    pub fn image_size(&self) -> usize {
        self.table.len()
    }
}

/// The unique `v` in the class of `alphabet` with `sweep(v) = w`.
pub fn sweep_inverse(w: &MultiWord, alphabet: &Alphabet) -> Result<MultiWord> {
    if !alphabet.contains(w) {
        return Err(Error::NotInAlphabet);
    }
    SweepInverter::new(alphabet.clone()).invert(w)
}

/// `w^{+N}` after checking `N` against the whole class of `w`.
pub fn embed_plus_n(w: &MultiWord, shift: i64) -> Result<MultiWord> {
    w.alphabet().check_shift(shift)?;
    Ok(w.shift_embed(shift))
}

/// Summary of an exhaustive pass over one rearrangement class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassReport {
    pub class_size: u64,
    pub image_size: u64,
    pub dyck_count: u64,
    pub dyck_image_count: u64,
    pub bijective: bool,
    pub dyck_preserving: bool,
    pub round_trip: bool,
}

/// Sweeps every word of the class and checks bijectivity, Dyck
/// preservation and the inverse round trip.
pub fn check_class(alphabet: &Alphabet) -> ClassReport {
    let mut table: HashMap<Vec<i64>, Vec<i64>> = HashMap::new();
    let mut class_size = 0u64;
    let mut dyck_count = 0u64;
    let mut dyck_images = std::collections::HashSet::new();
    let mut dyck_preserving = true;
    let mut closed = true;
    for w in alphabet.words() {
        class_size += 1;
        let s = w.sweep();
        if !alphabet.contains(&s) {
            closed = false;
        }
        if w.is_dyck() {
            dyck_count += 1;
            if s.is_dyck() {
                dyck_images.insert(s.letters().to_vec());
            } else {
                dyck_preserving = false;
            }
        }
        table.insert(s.into_letters(), w.into_letters());
    }
    let image_size = table.len() as u64;
    let bijective = closed && image_size == class_size;
    let round_trip = bijective
        && table.iter().all(|(img, pre)| {
            MultiWord::new(alphabet.d(), alphabet.n(), pre.clone())
                .map(|w| w.sweep().letters() == img.as_slice())
                .unwrap_or(false)
        });
    ClassReport {
        class_size,
        image_size,
        dyck_count,
        dyck_image_count: dyck_images.len() as u64,
        bijective,
        dyck_preserving: dyck_preserving && dyck_images.len() as u64 == dyck_count,
        round_trip,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(d: usize, letters: &[i64]) -> MultiWord {
        MultiWord::new(d, letters.len() / d, letters.to_vec()).unwrap()
    }

    #[test]
    fn levels_examples() {
        assert_eq!(w(1, &[5, -2, -2, 5, -2, -2, -2]).levels(), vec![5, 3, 1, 6, 4, 2, 0]);
        assert_eq!(w(1, &[0, 0, 0]).levels(), vec![0, 0, 0]);
        assert_eq!(w(2, &[-1, 0, 1, 0]).levels(), vec![-1, -1, 0, 0]);
    }

    #[test]
    fn dyck_examples() {
        assert!(w(1, &[5, -2, -2, 5, -2, -2, -2]).is_dyck());
        assert!(!w(1, &[-2, 5, -2, -2, 5, -2, -2]).is_dyck());
        assert!(!w(2, &[-1, 0, 1, 0]).is_dyck());
    }

    #[test]
    fn sweep_examples() {
        assert_eq!(
            w(1, &[5, -2, -2, 5, -2, -2, -2]).sweep().letters(),
            &[5, 5, -2, -2, -2, -2, -2]
        );
        assert_eq!(w(3, &[4, -1, 7]).sweep().letters(), &[4, -1, 7]);
        // Component 1 (levels -1, 0) is sorted decreasingly; component 2
        // (levels -1, 0) takes its negative level first.
        assert_eq!(w(2, &[-1, 0, 1, 0]).sweep().letters(), &[1, 0, -1, 0]);
        assert_eq!(w(2, &[-1, 0, 1, 0]).sweep_literal().letters(), &[-1, 0, 1, 0]);
    }

    #[test]
    fn literal_variant_breaks_dyck_words() {
        // The only Dyck word of its class.
        let dyck = w(2, &[0, 1, -2, 1]);
        assert!(dyck.is_dyck());
        assert!(!dyck.sweep_literal().is_dyck());
        assert_eq!(dyck.sweep(), dyck);
    }

    #[test]
    fn multi_sweep_is_not_injective_on_full_classes() {
        let a = Alphabet::new(vec![vec![-2, 0], vec![1, 1]]).unwrap();
        let r = check_class(&a);
        assert_eq!((r.class_size, r.image_size), (2, 1));
        assert!(!r.bijective);
        assert!(r.dyck_preserving);
    }

    #[test]
    fn inverse_examples() {
        let a = Alphabet::new(vec![vec![5, 5, -2, -2, -2, -2, -2]]).unwrap();
        let inv = sweep_inverse(&w(1, &[5, 5, -2, -2, -2, -2, -2]), &a).unwrap();
        assert_eq!(inv.letters(), &[5, -2, -2, 5, -2, -2, -2]);
        let single = Alphabet::new(vec![vec![3], vec![-1]]).unwrap();
        assert_eq!(sweep_inverse(&w(2, &[3, -1]), &single).unwrap().letters(), &[3, -1]);
    }

    #[test]
    fn inverse_round_trip_on_worked_class() {
        let a = Alphabet::new(vec![vec![5, 5, -2, -2, -2, -2, -2]]).unwrap();
        assert_eq!(a.class_size(), 21);
        let inv = SweepInverter::new(a.clone());
        assert_eq!(inv.image_size(), 21);
        for v in a.words() {
            assert_eq!(inv.invert(&v.sweep()).unwrap(), v);
        }
    }

    #[test]
    fn inverse_rejects_foreign_word() {
        let a = Alphabet::new(vec![vec![1, -1]]).unwrap();
        assert_eq!(sweep_inverse(&w(1, &[2, -2]), &a), Err(Error::NotInAlphabet));
    }

    #[test]
    fn shape_is_checked() {
        assert!(matches!(
            MultiWord::new(2, 3, vec![1, 2, 3]),
            Err(Error::WordShape { got: 3, expected: 6, .. })
        ));
    }

    #[test]
    fn embedding_example() {
        let e = w(2, &[-1, 0, 1, 0]).shift_embed(10);
        assert_eq!(e.letters(), &[9, -10, 11, -10]);
        assert_eq!(e.levels(), vec![9, -1, 10, 0]);
        let classical = w(1, &[5, -2, -2, 5, -2, -2, -2]);
        assert_eq!(embed_plus_n(&classical, 100).unwrap(), classical);
    }

    #[test]
    fn embedding_rejects_small_shift() {
        let word = w(2, &[-1, 0, 1, 0]);
        assert_eq!(embed_plus_n(&word, 1), Err(Error::BadN(1)));
        let n = word.alphabet().default_shift();
        assert!(embed_plus_n(&word, n).is_ok());
    }

    #[test]
    fn class_sizes() {
        let a = Alphabet::new(vec![vec![1, 1, 0], vec![2, 0, 0]]).unwrap();
        assert_eq!(a.class_size(), 9);
        assert_eq!(a.words().count(), 9);
        let first = a.arrangements(0)[1].clone();
        assert_eq!(a.words_with_first(first).count(), 3);
    }

    #[test]
    fn worked_class_report() {
        let a = Alphabet::new(vec![vec![5, -2, -2, -2, -2, -2, 5]]).unwrap();
        let r = check_class(&a);
        assert!(r.bijective && r.dyck_preserving && r.round_trip);
        assert_eq!(r.class_size, 21);
    }
}
