//! The computable steps that reduce the matrix-minor inequality to a
//! square.
//!
//! With `z` fixed and all `z_i ≠ 0`, the right-hand factor
//! `g(x) = Σ_{i<j} |x_i z_j − x_j z_i|` is affine on every cell of the braid
//! arrangement `{x_i/z_i = x_j/z_j}`, and the left-hand side `f(x, y)` is
//! convex in `x` and in `y` separately. Checking `f(x,y) ≤ g(x)·g(y)` on the
//! generating points of the cells (vectors whose slopes `x_i/z_i` take at
//! most two values) therefore suffices. On such points both sides have
//! closed forms in four aggregates `s1..s4`, and their difference is
//! `|λ−λ'|·|μ−μ'|·(s1·s4 − s2·s3)²`.

use std::fmt;

use crate::error::{Error, Result};
use crate::numeric::{det2, det3, Rat, Vec3};
use crate::zonotope::Zonotope3;

fn check_len(expected: usize, actual: usize) -> Result<()> {
    if expected != actual {
        return Err(Error::LengthMismatch { expected, actual });
    }
    Ok(())
}

/// A point whose slope sequence takes the value `lo` on `E` (entries marked
/// `true`) and `hi` on the complement.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TwoValuePattern {
    pub membership: Vec<bool>,
    pub lo: Rat,
    pub hi: Rat,
}

impl TwoValuePattern {
    pub fn new(membership: Vec<bool>, lo: Rat, hi: Rat) -> Self {
        TwoValuePattern { membership, lo, hi }
    }

    pub fn len(&self) -> usize {
        self.membership.len()
    }

    pub fn is_empty(&self) -> bool {
        self.membership.is_empty()
    }
}

/// Sums of `|z_i|` over `E∩F`, `E∩F'`, `E'∩F`, `E'∩F'`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SStats {
    pub s1: Rat,
    pub s2: Rat,
    pub s3: Rat,
    pub s4: Rat,
}

impl SStats {
    pub fn new(s1: Rat, s2: Rat, s3: Rat, s4: Rat) -> Result<Self> {
        let s = SStats { s1, s2, s3, s4 };
        s.validate()?;
        Ok(s)
    }

    pub fn from_ints(s: [i64; 4]) -> Result<Self> {
        SStats::new(s[0].into(), s[1].into(), s[2].into(), s[3].into())
    }

    fn validate(&self) -> Result<()> {
        for (name, v) in [("s1", &self.s1), ("s2", &self.s2), ("s3", &self.s3), ("s4", &self.s4)] {
            if v.is_negative() {
                return Err(Error::Negative { name, value: v.to_string() });
            }
        }
        Ok(())
    }

    pub fn as_array(&self) -> [&Rat; 4] {
        [&self.s1, &self.s2, &self.s3, &self.s4]
    }

    pub fn sum(&self) -> Rat {
        self.as_array().into_iter().sum()
    }

    /// Third elementary symmetric polynomial.
    pub fn e3(&self) -> Rat {
        let (a, b, c, d) = (&self.s1, &self.s2, &self.s3, &self.s4);
        b * c * d + a * c * d + a * b * d + a * b * c
    }

    /// `(s1+s2)(s3+s4)(s1+s3)(s2+s4)`.
    pub fn product_of_pairs(&self) -> Rat {
        let (a, b, c, d) = (&self.s1, &self.s2, &self.s3, &self.s4);
        (a + b) * (c + d) * (a + c) * (b + d)
    }

    /// Whether `s1·s4 = s2·s3`.
    pub fn is_balanced(&self) -> bool {
        &self.s1 * &self.s4 == &self.s2 * &self.s3
    }
}

/// Permutation sorting the slopes `x_i/z_i` ascending, ties by index.
/// Stored 0-based: `sigma[0]` is the index with the smallest slope.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BraidCell {
    pub sigma: Vec<usize>,
}

impl BraidCell {
    pub fn is_permutation(&self) -> bool {
        let mut seen = vec![false; self.sigma.len()];
        self.sigma.iter().all(|&i| i < seen.len() && !std::mem::replace(&mut seen[i], true))
    }
}

impl fmt::Display for BraidCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one_based: Vec<String> = self.sigma.iter().map(|i| (i + 1).to_string()).collect();
        write!(f, "({})", one_based.join(","))
    }
}

/// `x_i = lo·z_i` for `i ∈ E`, `x_i = hi·z_i` otherwise.
pub fn generating_point(p: &TwoValuePattern, z: &[Rat]) -> Result<Vec<Rat>> {
    check_len(p.len(), z.len())?;
    Ok(p.membership
        .iter()
        .zip(z)
        .map(|(&in_e, zi)| if in_e { &p.lo * zi } else { &p.hi * zi })
        .collect())
}

/// `g(x) = Σ_{i<j} |x_i z_j − x_j z_i|`.
pub fn g_direct(x: &[Rat], z: &[Rat]) -> Result<Rat> {
    check_len(x.len(), z.len())?;
    let mut acc = Rat::zero();
    for i in 0..x.len() {
        for j in i + 1..x.len() {
            acc += det2(&x[i], &x[j], &z[i], &z[j]).abs();
        }
    }
    Ok(acc)
}

/// `|lo − hi|·(Σ_{E}|z_i|)·(Σ_{E'}|z_i|)`.
pub fn g_closed_form(p: &TwoValuePattern, z: &[Rat]) -> Result<Rat> {
    check_len(p.len(), z.len())?;
    let (mut in_e, mut out_e) = (Rat::zero(), Rat::zero());
    for (&m, zi) in p.membership.iter().zip(z) {
        if m {
            in_e += zi.abs();
        } else {
            out_e += zi.abs();
        }
    }
    Ok((&p.lo - &p.hi).abs() * in_e * out_e)
}

pub fn s_stats(p_e: &[bool], p_f: &[bool], z: &[Rat]) -> Result<SStats> {
    check_len(p_e.len(), p_f.len())?;
    check_len(p_e.len(), z.len())?;
    let mut s: [Rat; 4] = Default::default();
    for ((&e, &f), zi) in p_e.iter().zip(p_f).zip(z) {
        let part = match (e, f) {
            (true, true) => 0,
            (true, false) => 1,
            (false, true) => 2,
            (false, false) => 3,
        };
        s[part] += zi.abs();
    }
    let [s1, s2, s3, s4] = s;
    Ok(SStats { s1, s2, s3, s4 })
}

/// `(Σ_{i<j<k} |det(a_i,a_j,a_k)|)·(Σ|z_i|)` with `a_i = (x_i, y_i, z_i)`.
pub fn f_direct(x: &[Rat], y: &[Rat], z: &[Rat]) -> Result<Rat> {
    check_len(x.len(), y.len())?;
    check_len(x.len(), z.len())?;
    let a: Vec<Vec3> = (0..x.len())
        .map(|i| Vec3::new(x[i].clone(), y[i].clone(), z[i].clone()))
        .collect();
    let mut triples = Rat::zero();
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            for k in j + 1..a.len() {
                triples += det3(&a[i], &a[j], &a[k]).abs();
            }
        }
    }
    let z_sum: Rat = z.iter().map(Rat::abs).sum();
    Ok(triples * z_sum)
}

/// `dl·dm·e3(s)·e1(s)` where `dl = |λ−λ'|`, `dm = |μ−μ'|`.
pub fn f_closed_form(s: &SStats, dl: &Rat, dm: &Rat) -> Result<Rat> {
    if dl.is_negative() {
        return Err(Error::Negative { name: "dl", value: dl.to_string() });
    }
    if dm.is_negative() {
        return Err(Error::Negative { name: "dm", value: dm.to_string() });
    }
    Ok(dl * dm * s.e3() * s.sum())
}

/// `(product_of_pairs − e3·e1, (s1·s4 − s2·s3)²)`; the two always agree.
pub fn slack_identity(s: &SStats) -> (Rat, Rat) {
    let slack = s.product_of_pairs() - s.e3() * s.sum();
    let square = (&s.s1 * &s.s4 - &s.s2 * &s.s3).pow(2);
    (slack, square)
}

/// The braid cell containing `x` (with respect to the slopes `x_i/z_i`).
pub fn braid_cell_of(x: &[Rat], z: &[Rat]) -> Result<BraidCell> {
    check_len(x.len(), z.len())?;
    let slopes = x
        .iter()
        .zip(z)
        .enumerate()
        .map(|(i, (xi, zi))| if zi.is_zero() { Err(Error::ZeroSlope(i)) } else { Ok(xi / zi) })
        .collect::<Result<Vec<Rat>>>()?;
    let mut sigma: Vec<usize> = (0..x.len()).collect();
    // stable sort keeps ascending index order among equal slopes
    sigma.sort_by(|&i, &j| slopes[i].cmp(&slopes[j]));
    Ok(BraidCell { sigma })
}

/// Exact midpoint test of convexity of `x ↦ f_direct(x, y, z)` along the
/// segment `[x0, x1]`. Swap the roles of the arguments to probe `y`.
pub fn biconvexity_probe(x0: &[Rat], x1: &[Rat], y: &[Rat], z: &[Rat]) -> Result<bool> {
    check_len(x0.len(), x1.len())?;
    let half = Rat::new(1, 2);
    let mid: Vec<Rat> = x0.iter().zip(x1).map(|(a, b)| (a + b) * &half).collect();
    let f_mid = f_direct(&mid, y, z)?;
    let f_avg = (f_direct(x0, y, z)? + f_direct(x1, y, z)?) * &half;
    Ok(f_mid <= f_avg)
}

/// The four-generator zonotope
/// `s1[0,(λ,μ,1)] + s2[0,(λ,μ',1)] + s3[0,(λ',μ,1)] + s4[0,(λ',μ',1)]`
/// together with `B = [0,e1]` and `C = [0,e2]`. Zero weights are dropped.
pub fn extremal_config(
    s: &SStats,
    lambda: &Rat,
    lambda_p: &Rat,
    mu: &Rat,
    mu_p: &Rat,
) -> Result<(Zonotope3, Zonotope3, Zonotope3)> {
    s.validate()?;
    let one = Rat::one();
    let dirs = [(lambda, mu), (lambda, mu_p), (lambda_p, mu), (lambda_p, mu_p)];
    let generators = s
        .as_array()
        .into_iter()
        .zip(dirs)
        .filter(|(w, _)| !w.is_zero())
        .map(|(w, (l, m))| Vec3::new(w * l, w * m, w * &one))
        .collect();
    Ok((
        Zonotope3::new(generators),
        Zonotope3::segment(Vec3::e1()),
        Zonotope3::segment(Vec3::e2()),
    ))
}
