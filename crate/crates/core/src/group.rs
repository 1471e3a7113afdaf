//! Group data for `G = Π_j Res_{F_{d_j}/F} GL_{n_j}` and the invariants of a
//! σ-conjugacy class: dominance, the λ invariant, the Newton-slope Levi
//! decomposition, the defect and the dimension formula.
//!
//! Newton points are stored relative to `F`: per factor one dominant
//! rational `n_j`-vector whose entries sum to the Kottwitz point `κ_j`. The
//! absolute Newton point of each of the `d_j` copies is this vector divided
//! by `d_j`.

use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::orbits::CocharTuple;

pub use crate::rational::Q;

/// One factor `Res_{F_d/F} GL_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Factor {
    pub n: usize,
    pub d: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupDatum {
    factors: Vec<Factor>,
}

impl GroupDatum {
    pub fn new(factors: Vec<Factor>) -> Result<Self> {
        if factors.is_empty() || factors.iter().any(|f| f.n == 0 || f.d == 0) {
            return Err(Error::InvalidSpec(
                "a group needs at least one factor with n, d >= 1".into(),
            ));
        }
        Ok(Self { factors })
    }

    pub fn gl(n: usize) -> Self {
        Self::res(1, n)
    }

    pub fn res(d: usize, n: usize) -> Self {
        Self::new(vec![Factor { n, d }]).expect("positive n, d")
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn is_split(&self) -> bool {
        self.factors.iter().all(|f| f.d == 1)
    }
}

/// Per-factor integer vectors in the relative cocharacter lattice.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IntVector(pub Vec<Vec<i64>>);

impl IntVector {
    pub fn single(v: Vec<i64>) -> Self {
        Self(vec![v])
    }

    pub fn factors(&self) -> &[Vec<i64>] {
        &self.0
    }
}

/// Newton point (relative, dominant) and Kottwitz point of a class.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SigmaInvariants {
    #[serde(with = "crate::rational::vec_vec_as_str")]
    nu: Vec<Vec<Q>>,
    kappa: Vec<i64>,
}

impl SigmaInvariants {
    pub fn new(nu: Vec<Vec<Q>>, kappa: Vec<i64>) -> Result<Self> {
        if nu.len() != kappa.len() || nu.is_empty() {
            return Err(Error::InvalidInvariants(format!(
                "{} Newton factors but {} Kottwitz entries",
                nu.len(),
                kappa.len()
            )));
        }
        for (j, (v, &k)) in nu.iter().zip(&kappa).enumerate() {
            if v.is_empty() {
                return Err(Error::InvalidInvariants(format!("factor {j} is empty")));
            }
            if v.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::InvalidInvariants(format!(
                    "Newton point of factor {j} is not dominant"
                )));
            }
            let total: Q = v.iter().sum();
            if total != Q::from_integer(k) {
                return Err(Error::InvalidInvariants(format!(
                    "factor {j}: Newton total {total} differs from kappa {k}"
                )));
            }
        }
        Ok(Self { nu, kappa })
    }

    /// Single factor.
    pub fn single(nu: Vec<Q>, kappa: i64) -> Result<Self> {
        Self::new(vec![nu], vec![kappa])
    }

    /// Central Newton point `(m/n, ..., m/n)` with `κ = m`.
    pub fn central(m: i64, n: usize) -> Self {
        Self::single(vec![Q::new(m, n as i64); n], m).expect("central point is consistent")
    }

    pub fn nu(&self) -> &[Vec<Q>] {
        &self.nu
    }

    pub fn kappa(&self) -> &[i64] {
        &self.kappa
    }

    fn check_against(&self, g: &GroupDatum) -> Result<()> {
        if g.factors().len() != self.nu.len()
            || g.factors().iter().zip(&self.nu).any(|(f, v)| f.n != v.len())
        {
            return Err(Error::InvalidInvariants(
                "invariants do not match the group shape".into(),
            ));
        }
        Ok(())
    }
}

fn partial_sums(x: &[Q]) -> Vec<Q> {
    x.iter()
        .scan(Q::zero(), |acc, &v| {
            *acc += v;
            Some(*acc)
        })
        .collect()
}

fn to_q(x: &[i64]) -> Vec<Q> {
    x.iter().map(|&v| Q::from_integer(v)).collect()
}

/// `⟨x, ω_j⟩ = Σ_{i≤j} x_i - (j/n) Σ x` for `j = 1..n-1`.
pub fn coweight_pairings(x: &[Q]) -> Vec<Q> {
    let n = x.len() as i64;
    let sums = partial_sums(x);
    let total = sums.last().copied().unwrap_or_else(Q::zero);
    (1..x.len())
        .map(|j| sums[j - 1] - total * Q::new(j as i64, n))
        .collect()
}

/// Partial-sum dominance `x ≤ y`; false if the totals differ.
pub fn dominance_leq(x: &[Q], y: &[Q]) -> Result<bool> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch(x.len(), y.len()));
    }
    let sx = partial_sums(x);
    let sy = partial_sums(y);
    if sx.last() != sy.last() {
        return Ok(false);
    }
    Ok(sx.iter().zip(&sy).all(|(a, b)| a <= b))
}

/// λ of one `GL_n` factor: start from the lift `(κ, 0, ..., 0)` and subtract
/// `⌈⟨λ' - ν, ω_j⟩⌉ (e_j - e_{j+1})` for every simple root.
fn lambda_factor(nu: &[Q], kappa: i64) -> Vec<i64> {
    let n = nu.len();
    let mut lambda = vec![0i64; n];
    lambda[0] = kappa;
    let diff: Vec<Q> = lambda.iter().zip(nu).map(|(&l, &v)| Q::from_integer(l) - v).collect();
    for (j, c) in coweight_pairings(&diff).into_iter().enumerate() {
        let c = c.ceil().to_integer();
        lambda[j] -= c;
        lambda[j + 1] += c;
    }
    lambda
}

/// The maximal integral point below the Newton point in the κ-class.
pub fn lambda_from_invariants(g: &GroupDatum, inv: &SigmaInvariants) -> Result<IntVector> {
    inv.check_against(g)?;
    Ok(IntVector(
        inv.nu
            .iter()
            .zip(&inv.kappa)
            .map(|(nu, &k)| lambda_factor(nu, k))
            .collect(),
    ))
}

/// `λ_i = ⌊i m / n⌋ - ⌊(i - 1) m / n⌋`.
pub fn lambda_superbasic_floor(m: i64, n: i64) -> Result<Vec<i64>> {
    if n <= 0 || m < 0 || m.gcd(&n) != 1 {
        return Err(Error::NotCoprime { m, n });
    }
    Ok((1..=n)
        .map(|i| Integer::div_floor(&(i * m), &n) - Integer::div_floor(&((i - 1) * m), &n))
        .collect())
}

/// Totals equal κ and `⟨λ - ν, ω_j⟩ ∈ (-1, 0]` for every coweight.
pub fn check_lambda_window(lambda: &IntVector, inv: &SigmaInvariants) -> bool {
    lambda.0.len() == inv.nu.len()
        && lambda.0.iter().zip(&inv.nu).zip(&inv.kappa).all(|((l, nu), &k)| {
            l.len() == nu.len()
                && l.iter().sum::<i64>() == k
                && window_holds(&to_q(l), nu)
        })
}

fn window_holds(lambda: &[Q], nu: &[Q]) -> bool {
    let diff: Vec<Q> = lambda.iter().zip(nu).map(|(a, b)| a - b).collect();
    coweight_pairings(&diff)
        .iter()
        .all(|&p| p > -Q::from_integer(1) && p <= Q::zero())
}

/// A superbasic block of the Levi decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Block {
    pub size: usize,
    #[serde(with = "crate::rational::as_str")]
    pub slope: Q,
}

impl Block {
    /// Kottwitz point of the block, `slope · size`.
    pub fn kappa(&self) -> i64 {
        (self.slope * Q::from_integer(self.size as i64)).to_integer()
    }

    pub fn invariants(&self) -> SigmaInvariants {
        SigmaInvariants::single(vec![self.slope; self.size], self.kappa())
            .expect("block slope times size is integral")
    }
}

/// Splits one dominant Newton vector into superbasic `GL_q` blocks.
pub fn levi_blocks(nu: &[Q]) -> Result<Vec<Block>> {
    let mut blocks = Vec::new();
    let mut i = 0;
    while i < nu.len() {
        let mut j = i;
        while j < nu.len() && nu[j] == nu[i] {
            j += 1;
        }
        let size = j - i;
        let slope = nu[i];
        let q = *slope.denom() as usize;
        if size % q != 0 {
            return Err(Error::NonIntegralDecomposition {
                size,
                slope: slope.to_string(),
            });
        }
        blocks.extend(std::iter::repeat(Block { size: q, slope }).take(size / q));
        i = j;
    }
    Ok(blocks)
}

/// Per factor, the superbasic blocks of the centralizer of ν.
pub fn newton_levi_decomposition(inv: &SigmaInvariants) -> Result<Vec<Vec<Block>>> {
    inv.nu.iter().map(|nu| levi_blocks(nu)).collect()
}

/// F-rank of `G` minus F-rank of `J_b`: each superbasic block of size `q`
/// contributes `q - 1`.
pub fn defect(g: &GroupDatum, inv: &SigmaInvariants) -> Result<i64> {
    inv.check_against(g)?;
    Ok(newton_levi_decomposition(inv)?
        .iter()
        .flatten()
        .map(|b| b.size as i64 - 1)
        .sum())
}

/// `⟨ρ, x⟩` for `GL_n`: `Σ_i (n + 1 - 2i)/2 · x_i`.
pub fn rho_pairing(x: &[Q]) -> Q {
    let n = x.len() as i64;
    x.iter()
        .enumerate()
        .map(|(i, &v)| v * Q::new(n + 1 - 2 * (i as i64 + 1), 2))
        .sum()
}

/// Mazur inequality `ν ≤ μ^♦` per factor, with equal totals.
pub fn in_b_g_mu(g: &GroupDatum, mu: &CocharTuple, inv: &SigmaInvariants) -> Result<bool> {
    inv.check_against(g)?;
    mu.check_against(g)?;
    for (j, nu) in inv.nu.iter().enumerate() {
        let bound = to_q(&mu.dominant().restriction(j));
        if !dominance_leq(nu, &bound)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `⟨ρ, μ + ν⟩ - defect/2`, the dimension of `X_μ(b)`.
pub fn adlv_dimension(g: &GroupDatum, mu: &CocharTuple, inv: &SigmaInvariants) -> Result<i64> {
    if !in_b_g_mu(g, mu, inv)? {
        return Err(Error::NotInBGmu(
            "Newton point is not dominated by mu".into(),
        ));
    }
    let dom = mu.dominant();
    let mut total = Q::zero();
    for (j, copies) in dom.factors().iter().enumerate() {
        for copy in copies {
            total += rho_pairing(&to_q(copy));
        }
        total += rho_pairing(&inv.nu[j]);
    }
    total -= Q::new(defect(g, inv)?, 2);
    if !total.is_integer() || total.is_negative() {
        return Err(Error::InvalidInvariants(format!(
            "dimension {total} is not a non-negative integer"
        )));
    }
    Ok(total.to_integer())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FunctorialityMode {
    CentralQuotient,
    Levi,
}

/// λ in the adjoint quotient `Z^n / Z(1, ..., 1)` computed from the lift of
/// the Kottwitz class in `0..n`, with the central correction in the
/// pairings. Returned as the representative with last entry 0.
fn lambda_adjoint(nu: &[Q], kappa: i64) -> Vec<i64> {
    let n = nu.len();
    let mut lambda = vec![0i64; n];
    lambda[0] = kappa.rem_euclid(n as i64);
    let diff: Vec<Q> = lambda.iter().zip(nu).map(|(&l, &v)| Q::from_integer(l) - v).collect();
    for (j, c) in coweight_pairings(&diff).into_iter().enumerate() {
        let c = c.ceil().to_integer();
        lambda[j] -= c;
        lambda[j + 1] += c;
    }
    adjoint_rep(&lambda)
}

fn adjoint_rep(x: &[i64]) -> Vec<i64> {
    let last = *x.last().expect("non-empty");
    x.iter().map(|v| v - last).collect()
}

/// λ commutes with the central quotient to the adjoint group, and with
/// the inclusion of the standard Levi given by the Newton slopes.
pub fn functoriality_check(
    g: &GroupDatum,
    inv: &SigmaInvariants,
    mode: FunctorialityMode,
) -> Result<bool> {
    let lambda = lambda_from_invariants(g, inv)?;
    match mode {
        FunctorialityMode::CentralQuotient => Ok(lambda
            .0
            .iter()
            .zip(&inv.nu)
            .zip(&inv.kappa)
            .all(|((l, nu), &k)| adjoint_rep(l) == lambda_adjoint(nu, k))),
        FunctorialityMode::Levi => {
            for (l, blocks) in lambda.0.iter().zip(newton_levi_decomposition(inv)?) {
                let glued: Vec<i64> = blocks
                    .iter()
                    .flat_map(|b| lambda_factor(&vec![b.slope; b.size], b.kappa()))
                    .collect();
                if &glued != l {
                    return Ok(false);
                }
            }
            Ok(true)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: &[(i64, i64)]) -> Vec<Q> {
        v.iter().map(|&(a, b)| Q::new(a, b)).collect()
    }

    fn ints(v: &[i64]) -> Vec<Q> {
        to_q(v)
    }

    #[test]
    fn dominance_examples() {
        let x = ints(&[0, 1, 1, 0, 1, 1, 1]);
        assert!(dominance_leq(&x, &x).unwrap());
        assert!(dominance_leq(&x, &vec![Q::new(5, 7); 7]).unwrap());
        assert!(!dominance_leq(&ints(&[1, 0]), &q(&[(1, 2), (1, 2)])).unwrap());
        assert!(!dominance_leq(&ints(&[1, 1]), &ints(&[1, 0])).unwrap());
        assert_eq!(dominance_leq(&ints(&[1]), &ints(&[1, 0])), Err(Error::LengthMismatch(1, 2)));
    }

    #[test]
    fn lambda_examples() {
        let g = GroupDatum::gl(7);
        let l = lambda_from_invariants(&g, &SigmaInvariants::central(5, 7)).unwrap();
        assert_eq!(l.0[0], vec![0, 1, 1, 0, 1, 1, 1]);

        let inv = SigmaInvariants::single(ints(&[3, 1, 1, -2]), 3).unwrap();
        let l = lambda_from_invariants(&GroupDatum::gl(4), &inv).unwrap();
        assert_eq!(l.0[0], vec![3, 1, 1, -2]);

        let inv = SigmaInvariants::single(q(&[(1, 1), (1, 2), (1, 2)]), 2).unwrap();
        let l = lambda_from_invariants(&GroupDatum::gl(3), &inv).unwrap();
        assert_eq!(l.0[0], vec![1, 0, 1]);
        assert!(check_lambda_window(&l, &inv));
    }

    #[test]
    fn invalid_invariants() {
        assert!(matches!(
            SigmaInvariants::single(q(&[(1, 2), (1, 2)]), 2),
            Err(Error::InvalidInvariants(_))
        ));
        assert!(SigmaInvariants::single(q(&[(0, 1), (1, 1)]), 1).is_err());
        let inv = SigmaInvariants::central(1, 2);
        assert!(lambda_from_invariants(&GroupDatum::gl(3), &inv).is_err());
    }

    #[test]
    fn floor_examples() {
        assert_eq!(lambda_superbasic_floor(5, 7).unwrap(), vec![0, 1, 1, 0, 1, 1, 1]);
        assert_eq!(lambda_superbasic_floor(1, 2).unwrap(), vec![0, 1]);
        assert_eq!(lambda_superbasic_floor(0, 1).unwrap(), vec![0]);
        assert_eq!(lambda_superbasic_floor(2, 4), Err(Error::NotCoprime { m: 2, n: 4 }));
    }

    #[test]
    fn levi_examples() {
        let blocks = levi_blocks(&q(&[(1, 1), (1, 3), (1, 3), (1, 3)])).unwrap();
        assert_eq!(
            blocks,
            vec![
                Block { size: 1, slope: Q::from_integer(1) },
                Block { size: 3, slope: Q::new(1, 3) }
            ]
        );
        let blocks = levi_blocks(&q(&[(1, 1), (1, 1), (1, 2), (1, 2)])).unwrap();
        assert_eq!(blocks.len(), 3);
        assert_eq!(blocks[2], Block { size: 2, slope: Q::new(1, 2) });
        assert_eq!(levi_blocks(&vec![Q::new(5, 7); 7]).unwrap().len(), 1);
        assert!(matches!(
            levi_blocks(&q(&[(1, 2), (1, 3), (1, 3)])),
            Err(Error::NonIntegralDecomposition { size: 1, .. })
        ));
    }

    #[test]
    fn defect_examples() {
        assert_eq!(defect(&GroupDatum::gl(7), &SigmaInvariants::central(5, 7)).unwrap(), 6);
        let inv = SigmaInvariants::single(ints(&[2, 0, -1]), 1).unwrap();
        assert_eq!(defect(&GroupDatum::gl(3), &inv).unwrap(), 0);
        let inv = SigmaInvariants::single(q(&[(1, 1), (1, 3), (1, 3), (1, 3)]), 2).unwrap();
        assert_eq!(defect(&GroupDatum::gl(4), &inv).unwrap(), 2);
    }

    #[test]
    fn dimension_examples() {
        let mu = CocharTuple::single(vec![vec![1, 1, 1, 1, 1, 0, 0]]);
        let d = adlv_dimension(&GroupDatum::gl(7), &mu, &SigmaInvariants::central(5, 7)).unwrap();
        assert_eq!(d, 2);

        let mu = CocharTuple::single(vec![vec![1, 0, 0], vec![1, 0, 0]]);
        let inv = SigmaInvariants::central(2, 3);
        assert_eq!(adlv_dimension(&GroupDatum::res(2, 3), &mu, &inv).unwrap(), 1);

        let mu = CocharTuple::single(vec![vec![1, 1, 0, 0]]);
        let inv = SigmaInvariants::single(q(&[(1, 1), (1, 3), (1, 3), (1, 3)]), 2).unwrap();
        assert_eq!(adlv_dimension(&GroupDatum::gl(4), &mu, &inv).unwrap(), 2);
    }

    #[test]
    fn dimension_rejects_classes_outside_b_g_mu() {
        let mu = CocharTuple::single(vec![vec![1, 0]]);
        let inv = SigmaInvariants::single(ints(&[1, 1]), 2).unwrap();
        assert!(matches!(adlv_dimension(&GroupDatum::gl(2), &mu, &inv), Err(Error::NotInBGmu(_))));
        let inv = SigmaInvariants::single(ints(&[2, -1]), 1).unwrap();
        assert!(matches!(adlv_dimension(&GroupDatum::gl(2), &mu, &inv), Err(Error::NotInBGmu(_))));
    }

    #[test]
    fn window_examples() {
        let inv = SigmaInvariants::single(ints(&[2, 2, 0]), 4).unwrap();
        assert!(check_lambda_window(&IntVector::single(vec![2, 2, 0]), &inv));
        let inv = SigmaInvariants::central(1, 2);
        assert!(!check_lambda_window(&IntVector::single(vec![1, 0]), &inv));
        assert!(check_lambda_window(&IntVector::single(vec![0, 1]), &inv));
        assert!(!check_lambda_window(&IntVector::single(vec![0, 2]), &inv));
    }

    #[test]
    fn functoriality_examples() {
        let inv = SigmaInvariants::single(q(&[(1, 1), (1, 2), (1, 2)]), 2).unwrap();
        assert!(functoriality_check(&GroupDatum::gl(3), &inv, FunctorialityMode::Levi).unwrap());
        let torus = GroupDatum::new(vec![Factor { n: 1, d: 1 }, Factor { n: 1, d: 2 }]).unwrap();
        let inv = SigmaInvariants::new(vec![ints(&[3]), ints(&[-1])], vec![3, -1]).unwrap();
        for mode in [FunctorialityMode::Levi, FunctorialityMode::CentralQuotient] {
            assert!(functoriality_check(&torus, &inv, mode).unwrap());
        }
        let inv = SigmaInvariants::central(1, 2);
        assert!(
            functoriality_check(&GroupDatum::gl(2), &inv, FunctorialityMode::CentralQuotient)
                .unwrap()
        );
    }

    #[test]
    fn rho_pairing_gl3() {
        assert_eq!(rho_pairing(&ints(&[1, 0, 0])), Q::from_integer(1));
        assert_eq!(rho_pairing(&vec![Q::new(2, 3); 3]), Q::zero());
    }
}
