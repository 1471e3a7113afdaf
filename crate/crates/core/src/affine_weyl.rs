//! Extended affine Weyl group `X_*(T) ⋊ S_n` of split `GL_n`.
//!
//! An element `t^λ w` acts on `R^n` by `v ↦ w(v) + λ` where
//! `w(v)_{w(i)} = v_i`. The base alcove is the dominant one whose closure
//! contains 0: `v_1 > v_2 > ... > v_n > v_1 - 1`.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{levi_blocks, lambda_from_invariants, GroupDatum, SigmaInvariants, Q};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AffineWeylElt {
    translation: Vec<i64>,
    /// `perm[i]` is the image of `i` (0-based).
    perm: Vec<usize>,
}

impl AffineWeylElt {
    pub fn new(translation: Vec<i64>, perm: Vec<usize>) -> Result<Self> {
        let n = translation.len();
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::InvalidSpec("perm must be a permutation of 0..n".into()));
        }
        Ok(Self { translation, perm })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            translation: vec![0; n],
            perm: (0..n).collect(),
        }
    }

    pub fn translation_by(lambda: Vec<i64>) -> Self {
        let n = lambda.len();
        Self {
            translation: lambda,
            perm: (0..n).collect(),
        }
    }

    /// The finite Weyl element `w` alone.
    pub fn weyl(perm: Vec<usize>) -> Result<Self> {
        Self::new(vec![0; perm.len()], perm)
    }

    pub fn n(&self) -> usize {
        self.translation.len()
    }

    pub fn translation(&self) -> &[i64] {
        &self.translation
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    fn permute<T: Copy + Default>(&self, v: &[T]) -> Vec<T> {
        let mut out = vec![T::default(); v.len()];
        for (i, &x) in v.iter().enumerate() {
            out[self.perm[i]] = x;
        }
        out
    }

    fn perm_inverse(&self) -> Vec<usize> {
        let mut inv = vec![0; self.n()];
        for (i, &p) in self.perm.iter().enumerate() {
            inv[p] = i;
        }
        inv
    }

    /// `(t^λ u)(t^ρ v) = t^{λ + u(ρ)} uv`.
    pub fn compose(&self, other: &AffineWeylElt) -> Result<AffineWeylElt> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch(self.n(), other.n()));
        }
        let moved = self.permute(&other.translation);
        Ok(AffineWeylElt {
            translation: self.translation.iter().zip(moved).map(|(a, b)| a + b).collect(),
            perm: other.perm.iter().map(|&j| self.perm[j]).collect(),
        })
    }

    pub fn inverse(&self) -> AffineWeylElt {
        let perm = self.perm_inverse();
        let w_inv = AffineWeylElt {
            translation: vec![0; self.n()],
            perm,
        };
        let neg: Vec<i64> = self.translation.iter().map(|x| -x).collect();
        AffineWeylElt {
            translation: w_inv.permute(&neg),
            perm: w_inv.perm,
        }
    }

    pub fn pow(&self, k: u32) -> AffineWeylElt {
        let mut acc = AffineWeylElt::identity(self.n());
        for _ in 0..k {
            acc = acc.compose(self).expect("same size");
        }
        acc
    }

    /// `v ↦ w(v) + λ`.
    pub fn act(&self, v: &[Q]) -> Vec<Q> {
        self.permute(v)
            .into_iter()
            .zip(&self.translation)
            .map(|(x, &l)| x + Q::from_integer(l))
            .collect()
    }

    /// Iwahori–Matsumoto length: over positive roots `e_i - e_j`, `|⟨λ, α⟩|`
    /// if `w^{-1} α > 0` and `|⟨λ, α⟩ - 1|` otherwise.
    pub fn length(&self) -> u64 {
        let winv = self.perm_inverse();
        let n = self.n();
        let mut len = 0u64;
        for i in 0..n {
            for j in i + 1..n {
                let pairing = self.translation[i] - self.translation[j];
                let term = if winv[i] < winv[j] { pairing } else { pairing - 1 };
                len += term.unsigned_abs();
            }
        }
        len
    }

    /// Length zero, i.e. an element of `Ω`.
    pub fn is_basic(&self) -> bool {
        self.length() == 0
    }

    /// Order of the finite part.
    pub fn perm_order(&self) -> u32 {
        let mut seen = vec![false; self.n()];
        let mut order = 1u32;
        for start in 0..self.n() {
            if seen[start] {
                continue;
            }
            let mut len = 0u32;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.perm[i];
                len += 1;
            }
            order = order.lcm(&len);
        }
        order
    }

    /// Dominant rearrangement of `translation(x^r) / r`, `r` the order of
    /// the finite part.
    pub fn newton(&self) -> Vec<Q> {
        let r = self.perm_order();
        let power = self.pow(r);
        let mut nu: Vec<Q> = power
            .translation
            .iter()
            .map(|&x| Q::new(x, r as i64))
            .collect();
        nu.sort_unstable_by(|a, b| b.cmp(a));
        nu
    }

    /// `ℓ(x^k) = k ℓ(x)` for `k = 1..r`.
    pub fn straight_by_powers(&self) -> bool {
        let l = self.length();
        let r = self.perm_order();
        let mut acc = AffineWeylElt::identity(self.n());
        for k in 1..=r as u64 {
            acc = acc.compose(self).expect("same size");
            if acc.length() != k * l {
                return false;
            }
        }
        true
    }

    /// `ℓ(x) = ⟨2ρ, ν_x⟩`.
    pub fn straight_by_newton(&self) -> bool {
        two_rho(&self.newton()) == Q::from_integer(self.length() as i64)
    }

    pub fn is_straight(&self) -> bool {
        self.straight_by_powers() && self.straight_by_newton()
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &AffineWeylElt) -> AffineWeylElt {
        let shift = self.n();
        AffineWeylElt {
            translation: self.translation.iter().chain(&other.translation).copied().collect(),
            perm: self
                .perm
                .iter()
                .copied()
                .chain(other.perm.iter().map(|&p| p + shift))
                .collect(),
        }
    }
}

/// The length-zero element of `GL_q` whose translation is the dominant
/// minuscule vector of total `p`.
pub fn basic_element(q: usize, p: i64) -> AffineWeylElt {
    let qi = q as i64;
    let (a, r) = p.div_mod_floor(&qi);
    let r = r as usize;
    let translation: Vec<i64> = (0..q).map(|i| if i < r { a + 1 } else { a }).collect();
    // w^{-1} sends the r raised coordinates after the q - r others, so that
    // exactly the roots between raised and lowered entries are inverted.
    let mut perm = vec![0; q];
    for i in 0..q {
        let winv = if i < r { i + (q - r) } else { i - r };
        perm[winv] = i;
    }
    AffineWeylElt { translation, perm }
}

fn single_split(n: usize, inv: &SigmaInvariants) -> Result<()> {
    if inv.nu().len() != 1 || inv.nu()[0].len() != n {
        return Err(Error::InvalidInvariants(format!(
            "expected one split GL_{n} factor"
        )));
    }
    Ok(())
}

/// Block-diagonal assembly of the basic elements of the superbasic blocks.
pub fn assemble_straight(n: usize, inv: &SigmaInvariants) -> Result<AffineWeylElt> {
    single_split(n, inv)?;
    let blocks = levi_blocks(&inv.nu()[0])?;
    let mut blocks = blocks.iter();
    let first = blocks.next().expect("n >= 1");
    let mut x = basic_element(first.size, first.kappa());
    for b in blocks {
        x = x.direct_sum(&basic_element(b.size, b.kappa()));
    }
    Ok(x)
}

/// Straight elements `t^λ w` with `λ` in the box `[-B, B]^n`, total `κ` and
/// Newton point `ν`, in lexicographic order of `(λ, w)`. Stops after
/// `limit` hits when given.
pub fn search_straight(
    n: usize,
    inv: &SigmaInvariants,
    bound: i64,
    limit: Option<usize>,
) -> Result<Vec<AffineWeylElt>> {
    single_split(n, inv)?;
    let kappa = inv.kappa()[0];
    let nu = &inv.nu()[0];
    let target = two_rho(nu);
    // ℓ(t^λ w) ≥ ⟨2ρ, λ_dom⟩ - ℓ(w), and a straight element has ℓ = ⟨2ρ, ν⟩.
    let slack = Q::from_integer((n * (n - 1) / 2) as i64);
    let perms = all_perms(n);
    let limit = limit.unwrap_or(usize::MAX);
    let mut out = Vec::new();
    let mut lambda = vec![0i64; n];
    box_rec(&mut lambda, 0, kappa, bound, &mut |l| {
        if out.len() >= limit {
            return;
        }
        let dom: Vec<Q> = sorted_desc(l).into_iter().map(Q::from_integer).collect();
        if two_rho(&dom) > target + slack {
            return;
        }
        for p in &perms {
            let x = AffineWeylElt {
                translation: l.to_vec(),
                perm: p.clone(),
            };
            if Q::from_integer(x.length() as i64) == target && &x.newton() == nu && x.is_straight() {
                out.push(x);
                if out.len() >= limit {
                    return;
                }
            }
        }
    });
    Ok(out)
}

fn two_rho(dominant: &[Q]) -> Q {
    let n = dominant.len();
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .map(|(i, j)| dominant[i] - dominant[j])
        .sum()
}

fn box_rec(lambda: &mut Vec<i64>, i: usize, remaining: i64, bound: i64, f: &mut impl FnMut(&[i64])) {
    let n = lambda.len();
    if i == n - 1 {
        if remaining.abs() <= bound {
            lambda[i] = remaining;
            f(lambda);
        }
        return;
    }
    let left = (n - 1 - i) as i64;
    for v in -bound..=bound {
        let rest = remaining - v;
        if rest.abs() > left * bound {
            continue;
        }
        lambda[i] = v;
        box_rec(lambda, i + 1, rest, bound, f);
    }
}

fn all_perms(n: usize) -> Vec<Vec<usize>> {
    let mut cur: Vec<usize> = (0..n).collect();
    let mut out = vec![cur.clone()];
    while crate::sweep::next_permutation(&mut cur) {
        out.push(cur.clone());
    }
    out
}

/// A straight element in the class `(ν, κ)`. Assembled from basic block
/// elements when that is straight, otherwise the first hit of the box
/// search with bound `|κ| + n`.
pub fn find_straight(n: usize, inv: &SigmaInvariants) -> Result<AffineWeylElt> {
    let assembled = assemble_straight(n, inv)?;
    if assembled.is_straight() && assembled.newton() == inv.nu()[0] {
        return Ok(assembled);
    }
    let bound = inv.kappa()[0].abs() + n as i64;
    search_straight(n, inv, bound, Some(1))?
        .into_iter()
        .next()
        .ok_or_else(|| Error::NoneFound(format!("no straight element within bound {bound}")))
}

fn sorted_desc(v: &[i64]) -> Vec<i64> {
    let mut v = v.to_vec();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

/// The translation part of a straight element has the same dominant
/// representative as λ; for central ν it is the dominant minuscule lift.
pub fn verify_prop_lambda(n: usize, inv: &SigmaInvariants) -> Result<bool> {
    let x = find_straight(n, inv)?;
    let lambda = lambda_from_invariants(&GroupDatum::gl(n), inv)?;
    let mut ok = sorted_desc(x.translation()) == sorted_desc(&lambda.0[0]);
    let nu = &inv.nu()[0];
    if nu.windows(2).all(|w| w[0] == w[1]) {
        ok &= x.translation() == basic_element(n, inv.kappa()[0]).translation();
        let t = x.translation();
        ok &= t.windows(2).all(|w| w[0] >= w[1]) && t[0] - t[n - 1] <= 1;
    }
    Ok(ok)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn elt(t: &[i64], p: &[usize]) -> AffineWeylElt {
        AffineWeylElt::new(t.to_vec(), p.to_vec()).unwrap()
    }

    #[test]
    fn composition() {
        let x = elt(&[1, 0], &[1, 0]);
        assert_eq!(x.compose(&x).unwrap(), elt(&[1, 1], &[0, 1]));
        let y = elt(&[2, -1, 0], &[2, 0, 1]);
        assert_eq!(y.compose(&y.inverse()).unwrap(), AffineWeylElt::identity(3));
        assert_eq!(y.inverse().compose(&y).unwrap(), AffineWeylElt::identity(3));
        assert_eq!(x.compose(&y), Err(Error::SizeMismatch(2, 3)));
    }

    #[test]
    fn composition_matches_action() {
        let x = elt(&[2, -1, 0], &[2, 0, 1]);
        let y = elt(&[0, 1, 1], &[1, 0, 2]);
        let v = vec![Q::new(1, 3), Q::new(-2, 5), Q::new(7, 2)];
        assert_eq!(x.compose(&y).unwrap().act(&v), x.act(&y.act(&v)));
    }

    #[test]
    fn length_examples() {
        assert_eq!(AffineWeylElt::identity(3).length(), 0);
        assert_eq!(elt(&[1, 0], &[1, 0]).length(), 0);
        assert_eq!(elt(&[1, 0], &[0, 1]).length(), 1);
        assert_eq!(elt(&[0, 0], &[1, 0]).length(), 1);
    }

    #[test]
    fn basic_examples() {
        assert!(AffineWeylElt::identity(2).is_basic());
        assert!(elt(&[1, 0], &[1, 0]).is_basic());
        assert!(!elt(&[1, 0], &[0, 1]).is_basic());
        for q in 1..6 {
            for p in -4..8 {
                let b = basic_element(q, p);
                assert!(b.is_basic(), "q={q} p={p}");
                assert_eq!(b.newton(), vec![Q::new(p, q as i64); q]);
            }
        }
    }

    #[test]
    fn newton_examples() {
        assert_eq!(elt(&[1, 0], &[1, 0]).newton(), vec![Q::new(1, 2); 2]);
        assert_eq!(
            AffineWeylElt::translation_by(vec![0, 3, -1]).newton(),
            vec![Q::from_integer(3), Q::from_integer(0), Q::from_integer(-1)]
        );
        assert_eq!(AffineWeylElt::identity(2).newton(), vec![Q::from_integer(0); 2]);
    }

    #[test]
    fn straight_examples() {
        assert!(elt(&[1, 0], &[1, 0]).is_straight());
        assert!(AffineWeylElt::translation_by(vec![3, 1, 1]).is_straight());
        // t^{(1,-1)} s: length 1, square t^{(0,0)}.
        let x = elt(&[1, -1], &[1, 0]);
        assert_eq!(x.length(), 1);
        assert!(!x.straight_by_powers());
        assert!(!x.straight_by_newton());
    }

    #[test]
    fn find_straight_examples() {
        let inv = SigmaInvariants::central(1, 2);
        assert_eq!(find_straight(2, &inv).unwrap(), elt(&[1, 0], &[1, 0]));
        let inv = SigmaInvariants::single(vec![Q::from_integer(2), Q::from_integer(0)], 2).unwrap();
        assert_eq!(find_straight(2, &inv).unwrap(), AffineWeylElt::translation_by(vec![2, 0]));
        let inv = SigmaInvariants::single(vec![Q::from_integer(1), Q::new(1, 2), Q::new(1, 2)], 2)
            .unwrap();
        assert_eq!(find_straight(3, &inv).unwrap(), elt(&[1, 1, 0], &[0, 2, 1]));
    }

    #[test]
    fn overlapping_slopes_fall_back_to_search() {
        // Slopes 1/2 and 1/3 share the unit interval; the block assembly is
        // not straight there.
        let nu = vec![Q::new(1, 2), Q::new(1, 2), Q::new(1, 3), Q::new(1, 3), Q::new(1, 3)];
        let inv = SigmaInvariants::single(nu.clone(), 2).unwrap();
        assert!(!assemble_straight(5, &inv).unwrap().is_straight());
        let x = find_straight(5, &inv).unwrap();
        assert!(x.is_straight());
        assert_eq!(x.newton(), nu);
    }

    #[test]
    fn prop_lambda_examples() {
        assert!(verify_prop_lambda(2, &SigmaInvariants::central(1, 2)).unwrap());
        let inv = SigmaInvariants::single(vec![Q::from_integer(4), Q::from_integer(-1)], 3).unwrap();
        assert!(verify_prop_lambda(2, &inv).unwrap());
        let inv = SigmaInvariants::single(vec![Q::from_integer(1), Q::new(1, 2), Q::new(1, 2)], 2)
            .unwrap();
        assert!(verify_prop_lambda(3, &inv).unwrap());
    }
}
