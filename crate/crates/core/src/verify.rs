//! Exact checkers for the zonotope Bezout-type inequality, its matrix-minor
//! form, and the constant-2 inequality for general bodies, plus a seeded
//! fuzz harness.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::io;
use crate::numeric::{det2, det3, Rat, Vec3};
use crate::rng::SplitMix64;
use crate::zonotope::{mixed_volume, volume, Zonotope3};

/// Both sides of an inequality `lhs ≤ rhs`, where each side is a product of
/// two factors and the right side carries a constant.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IneqReport {
    pub lhs: Rat,
    pub rhs: Rat,
    /// `rhs − lhs`.
    pub slack: Rat,
    pub holds: bool,
    /// `lhs / (rhs without its constant)`; present iff both right factors
    /// are nonzero.
    pub ratio: Option<Rat>,
}

impl IneqReport {
    pub fn from_factors(lhs: (Rat, Rat), rhs: (Rat, Rat), constant: &Rat) -> Self {
        let lhs_val = &lhs.0 * &lhs.1;
        let rhs_bare = &rhs.0 * &rhs.1;
        let ratio = (!rhs.0.is_zero() && !rhs.1.is_zero()).then(|| &lhs_val / &rhs_bare);
        let rhs_val = constant * rhs_bare;
        let slack = &rhs_val - &lhs_val;
        IneqReport { holds: !slack.is_negative(), lhs: lhs_val, rhs: rhs_val, slack, ratio }
    }

    pub fn is_equality(&self) -> bool {
        self.slack.is_zero()
    }
}

impl fmt::Display for IneqReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "lhs   = {} (~{})", self.lhs, self.lhs.approx_string())?;
        writeln!(f, "rhs   = {} (~{})", self.rhs, self.rhs.approx_string())?;
        writeln!(f, "slack = {} (~{})", self.slack, self.slack.approx_string())?;
        match &self.ratio {
            Some(q) => writeln!(f, "ratio = {} (~{})", q, q.approx_string())?,
            None => writeln!(f, "ratio = undefined")?,
        }
        write!(f, "holds = {}", self.holds)
    }
}

/// `V(A,A,A)·V(A,B,C) ≤ (3/2)·V(A,A,B)·V(A,A,C)`.
pub fn check_bezout(a: &Zonotope3, b: &Zonotope3, c: &Zonotope3) -> IneqReport {
    let (vol, abc, aab, aac) = bezout_volumes(a, b, c);
    IneqReport::from_factors((vol, abc), (aab, aac), &Rat::new(3, 2))
}

/// `V(A,A,A), V(A,B,C), V(A,A,B), V(A,A,C)`.
pub fn bezout_volumes(a: &Zonotope3, b: &Zonotope3, c: &Zonotope3) -> (Rat, Rat, Rat, Rat) {
    (volume(a), mixed_volume(a, b, c), mixed_volume(a, a, b), mixed_volume(a, a, c))
}

/// `V(A,A,A)·V(A,B,C) / (V(A,A,B)·V(A,A,C))`; at most 3/2 on zonotopes.
pub fn tightness_ratio(a: &Zonotope3, b: &Zonotope3, c: &Zonotope3) -> Result<Rat> {
    let (vol, abc, aab, aac) = bezout_volumes(a, b, c);
    if aab.is_zero() {
        return Err(Error::ZeroDenominatorFactor("V(A,A,B)"));
    }
    if aac.is_zero() {
        return Err(Error::ZeroDenominatorFactor("V(A,A,C)"));
    }
    Ok(vol * abc / (aab * aac))
}

/// The four mixed volumes entering `V(A,A,D)·V(B,C,D) ≤ 2·V(A,B,D)·V(A,C,D)`.
/// Lets bodies that are not zonotopes be checked from precomputed values.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AfSquareValues {
    pub aad: Rat,
    pub bcd: Rat,
    pub abd: Rat,
    pub acd: Rat,
}

impl AfSquareValues {
    pub fn of_zonotopes(a: &Zonotope3, b: &Zonotope3, c: &Zonotope3, d: &Zonotope3) -> Self {
        AfSquareValues {
            aad: mixed_volume(a, a, d),
            bcd: mixed_volume(b, c, d),
            abd: mixed_volume(a, b, d),
            acd: mixed_volume(a, c, d),
        }
    }

    pub fn check(&self) -> IneqReport {
        IneqReport::from_factors(
            (self.aad.clone(), self.bcd.clone()),
            (self.abd.clone(), self.acd.clone()),
            &Rat::from_int(2),
        )
    }
}

/// `V(A,A,D)·V(B,C,D) ≤ 2·V(A,B,D)·V(A,C,D)` for zonotopes.
pub fn check_af_square(a: &Zonotope3, b: &Zonotope3, c: &Zonotope3, d: &Zonotope3) -> IneqReport {
    AfSquareValues::of_zonotopes(a, b, c, d).check()
}

fn lemma_factors(vectors: &[Vec3]) -> ((Rat, Rat), (Rat, Rat)) {
    let m = vectors.len();
    let mut triples = Rat::zero();
    for i in 0..m {
        for j in i + 1..m {
            for k in j + 1..m {
                triples += det3(&vectors[i], &vectors[j], &vectors[k]).abs();
            }
        }
    }
    let z_sum: Rat = vectors.iter().map(|v| v.z.abs()).sum();
    let (mut yz, mut xz) = (Rat::zero(), Rat::zero());
    for i in 0..m {
        for j in i + 1..m {
            let (a, b) = (&vectors[i], &vectors[j]);
            yz += det2(&a.y, &b.y, &a.z, &b.z).abs();
            xz += det2(&a.x, &b.x, &a.z, &b.z).abs();
        }
    }
    ((triples, z_sum), (yz, xz))
}

/// `(Σ_{i<j<k} |det(a_i,a_j,a_k)|)·(Σ_i |z_i|)`.
pub fn lemma_lhs(vectors: &[Vec3]) -> Rat {
    let ((t, z), _) = lemma_factors(vectors);
    t * z
}

/// `(Σ_{i<j} |y_i z_j − y_j z_i|)·(Σ_{i<j} |x_i z_j − x_j z_i|)`.
pub fn lemma_rhs(vectors: &[Vec3]) -> Rat {
    let (_, (yz, xz)) = lemma_factors(vectors);
    yz * xz
}

pub fn check_lemma_matrix(vectors: &[Vec3]) -> IneqReport {
    let (l, r) = lemma_factors(vectors);
    IneqReport::from_factors(l, r, &Rat::one())
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum FuzzTarget {
    Bezout,
    Lemma,
    AfSquare,
}

impl fmt::Display for FuzzTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FuzzTarget::Bezout => "bezout",
            FuzzTarget::Lemma => "lemma",
            FuzzTarget::AfSquare => "af-square",
        })
    }
}

impl FromStr for FuzzTarget {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bezout" => Ok(FuzzTarget::Bezout),
            "lemma" => Ok(FuzzTarget::Lemma),
            "af-square" | "af_square" => Ok(FuzzTarget::AfSquare),
            _ => Err(Error::InvalidConfig(format!("unknown target {s:?}"))),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FuzzConfig {
    pub trials: u64,
    pub m_max: usize,
    pub coeff_bound: i64,
    pub target: FuzzTarget,
    pub seed: u64,
}

impl FuzzConfig {
    pub fn new(target: FuzzTarget, trials: u64, seed: u64) -> Self {
        FuzzConfig { trials, m_max: 6, coeff_bound: 16, target, seed }
    }

    pub fn validate(&self) -> Result<()> {
        if self.trials < 1 {
            return Err(Error::InvalidConfig("trials must be at least 1".into()));
        }
        if self.m_max < 1 {
            return Err(Error::InvalidConfig("m_max must be at least 1".into()));
        }
        if self.coeff_bound < 1 {
            return Err(Error::InvalidConfig("coeff_bound must be at least 1".into()));
        }
        Ok(())
    }
}

/// Sampled input of one fuzz trial.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum TrialInput {
    Bezout { a: Zonotope3, b: Zonotope3, c: Zonotope3 },
    Lemma { vectors: Vec<Vec3> },
    AfSquare { a: Zonotope3, b: Zonotope3, c: Zonotope3, d: Zonotope3 },
}

impl TrialInput {
    pub fn sample(config: &FuzzConfig, trial: u64) -> Self {
        let mut rng = SplitMix64::for_trial(config.seed, trial);
        let (m, bound) = (config.m_max, config.coeff_bound);
        match config.target {
            FuzzTarget::Bezout => {
                let a = rng.zonotope(m, bound);
                let b = rng.zonotope(m, bound);
                let c = rng.zonotope(m, bound);
                TrialInput::Bezout { a, b, c }
            }
            FuzzTarget::Lemma => {
                let len = rng.range_i64(1, m as i64) as usize;
                TrialInput::Lemma { vectors: rng.vectors(len, bound) }
            }
            FuzzTarget::AfSquare => {
                let a = rng.zonotope(m, bound);
                let b = rng.zonotope(m, bound);
                let c = rng.zonotope(m, bound);
                let d = rng.zonotope(m, bound);
                TrialInput::AfSquare { a, b, c, d }
            }
        }
    }

    /// Generator count of the first body (or the vector count).
    pub fn m(&self) -> usize {
        match self {
            TrialInput::Bezout { a, .. } | TrialInput::AfSquare { a, .. } => a.len(),
            TrialInput::Lemma { vectors } => vectors.len(),
        }
    }

    pub fn evaluate(&self) -> IneqReport {
        match self {
            TrialInput::Bezout { a, b, c } => check_bezout(a, b, c),
            TrialInput::Lemma { vectors } => check_lemma_matrix(vectors),
            TrialInput::AfSquare { a, b, c, d } => check_af_square(a, b, c, d),
        }
    }

    /// The input in the crate's text formats, one block per body, each
    /// preceded by a comment naming its slot.
    pub fn render(&self) -> String {
        let block = |name: &str, z: &Zonotope3| format!("# {name}\n{}", io::render_zonotope(z));
        match self {
            TrialInput::Bezout { a, b, c } => [block("A", a), block("B", b), block("C", c)].concat(),
            TrialInput::Lemma { vectors } => io::render_matrix(&crate::numeric::Mat3xM::new(vectors.clone())),
            TrialInput::AfSquare { a, b, c, d } => {
                [block("A", a), block("B", b), block("C", c), block("D", d)].concat()
            }
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TrialRecord {
    pub trial: u64,
    pub target: FuzzTarget,
    pub input: TrialInput,
    pub report: IneqReport,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FuzzSummary {
    pub trials: u64,
    pub failures: u64,
    pub min_slack: Rat,
    pub max_ratio: Option<Rat>,
    /// Rendered input of the extremal trial: the minimum-slack trial if any
    /// trial failed, otherwise the maximum-ratio trial (falling back to the
    /// minimum-slack trial when no ratio is defined).
    pub worst_case: String,
    pub worst_trial: u64,
    pub seed: u64,
}

impl fmt::Display for FuzzSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "seed      = {}", self.seed)?;
        writeln!(f, "trials    = {}", self.trials)?;
        writeln!(f, "failures  = {}", self.failures)?;
        writeln!(f, "min_slack = {} (~{})", self.min_slack, self.min_slack.approx_string())?;
        match &self.max_ratio {
            Some(q) => writeln!(f, "max_ratio = {} (~{})", q, q.approx_string())?,
            None => writeln!(f, "max_ratio = undefined")?,
        }
        writeln!(f, "worst trial {}:", self.worst_trial)?;
        write!(f, "{}", self.worst_case)
    }
}

/// Samples and evaluates every trial. Trials run in parallel; the result is
/// ordered by trial index and independent of scheduling.
pub fn fuzz_trials(config: &FuzzConfig) -> Result<Vec<TrialRecord>> {
    config.validate()?;
    Ok((0..config.trials)
        .into_par_iter()
        .map(|trial| {
            let input = TrialInput::sample(config, trial);
            let report = input.evaluate();
            TrialRecord { trial, target: config.target, input, report }
        })
        .collect())
}

pub fn summarize(config: &FuzzConfig, records: &[TrialRecord]) -> FuzzSummary {
    assert!(!records.is_empty(), "summary of zero trials");
    let failures = records.iter().filter(|r| !r.report.holds).count() as u64;
    // strict comparisons keep the lowest trial index on ties
    let mut min_idx = 0;
    let mut max_idx: Option<usize> = None;
    for (i, r) in records.iter().enumerate() {
        if r.report.slack < records[min_idx].report.slack {
            min_idx = i;
        }
        if let Some(q) = &r.report.ratio {
            if max_idx.is_none_or(|j| Some(q) > records[j].report.ratio.as_ref()) {
                max_idx = Some(i);
            }
        }
    }
    let worst = match (failures, max_idx) {
        (0, Some(j)) => j,
        _ => min_idx,
    };
    FuzzSummary {
        trials: records.len() as u64,
        failures,
        min_slack: records[min_idx].report.slack.clone(),
        max_ratio: max_idx.and_then(|j| records[j].report.ratio.clone()),
        worst_case: records[worst].input.render(),
        worst_trial: records[worst].trial,
        seed: config.seed,
    }
}

pub fn fuzz(config: &FuzzConfig) -> Result<FuzzSummary> {
    let records = fuzz_trials(config)?;
    Ok(summarize(config, &records))
}

/// Checks the exact identities linking the matrix form to mixed volumes:
/// with `B = [0,e1]`, `C = [0,e2]`, `lemma_lhs = 6·Vol(A)·V(A,B,C)` and
/// `lemma_rhs = 9·V(A,A,B)·V(A,A,C)`. Returns both pairs of values.
pub fn lemma_bridge(vectors: &[Vec3]) -> ((Rat, Rat), (Rat, Rat)) {
    let a = Zonotope3::new(vectors.to_vec());
    let (b, c) = (Zonotope3::segment(Vec3::e1()), Zonotope3::segment(Vec3::e2()));
    let via_volumes = (
        Rat::from_int(6) * volume(&a) * mixed_volume(&a, &b, &c),
        Rat::from_int(9) * mixed_volume(&a, &a, &b) * mixed_volume(&a, &a, &c),
    );
    ((lemma_lhs(vectors), lemma_rhs(vectors)), via_volumes)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: i64, y: i64, z: i64) -> Vec3 {
        Vec3::from_ints(x, y, z)
    }

    fn r(n: i64) -> Rat {
        Rat::from_int(n)
    }

    fn q(n: i64, d: i64) -> Rat {
        Rat::new(n, d)
    }

    fn equality_vectors() -> Vec<Vec3> {
        vec![v(0, 0, 1), v(0, 1, 1), v(1, 0, 1), v(1, 1, 1)]
    }

    fn seg(u: Vec3) -> Zonotope3 {
        Zonotope3::segment(u)
    }

    #[test]
    fn bezout_examples() {
        let cube = Zonotope3::unit_cube();
        let rep = check_bezout(&cube, &cube, &cube);
        assert_eq!((rep.lhs.clone(), rep.rhs.clone()), (r(1), q(3, 2)));
        assert!(rep.holds);

        let a = Zonotope3::new(equality_vectors());
        let rep = check_bezout(&a, &seg(Vec3::e1()), &seg(Vec3::e2()));
        assert_eq!(rep.lhs, q(8, 3));
        assert_eq!(rep.rhs, q(8, 3));
        assert!(rep.holds && rep.is_equality());
        assert_eq!(rep.ratio, Some(q(3, 2)));

        let flat = Zonotope3::new(vec![Vec3::e1(), Vec3::e2()]);
        let rep = check_bezout(&flat, &Zonotope3::new(vec![v(1, 2, 3), v(-1, 0, 2)]), &cube);
        assert_eq!(rep.lhs, r(0));
        assert!(rep.holds);
    }

    #[test]
    fn af_square_examples() {
        let cube = Zonotope3::unit_cube();
        let rep = check_af_square(&cube, &seg(Vec3::e1()), &seg(Vec3::e2()), &cube);
        assert_eq!(rep.lhs, q(1, 6));
        assert_eq!(rep.rhs, q(2, 9));
        assert!(rep.holds);

        let pyramid = AfSquareValues { aad: q(1, 3), bcd: q(1, 6), abd: q(1, 6), acd: q(1, 6) };
        let rep = pyramid.check();
        assert_eq!((rep.lhs.clone(), rep.rhs.clone()), (q(1, 18), q(1, 18)));
        assert!(rep.is_equality());

        let s = seg(Vec3::e1());
        let rep = check_af_square(&s, &s, &s, &s);
        assert_eq!((rep.lhs.clone(), rep.rhs.clone()), (r(0), r(0)));
        assert!(rep.holds);
        assert_eq!(rep.ratio, None);
    }

    #[test]
    fn lemma_examples() {
        let cube = vec![Vec3::e1(), Vec3::e2(), Vec3::e3()];
        assert_eq!((lemma_lhs(&cube), lemma_rhs(&cube)), (r(1), r(1)));
        assert!(check_lemma_matrix(&cube).holds);

        let eq = equality_vectors();
        assert_eq!((lemma_lhs(&eq), lemma_rhs(&eq)), (r(16), r(16)));
        assert!(check_lemma_matrix(&eq).holds);

        let flat = vec![v(1, 0, 0), v(0, 1, 0)];
        assert_eq!((lemma_lhs(&flat), lemma_rhs(&flat)), (r(0), r(0)));
        assert!(check_lemma_matrix(&flat).holds);

        assert_eq!(lemma_lhs(&[]), r(0));
    }

    #[test]
    fn tightness_examples() {
        let (b, c) = (seg(Vec3::e1()), seg(Vec3::e2()));
        let a = Zonotope3::new(equality_vectors());
        assert_eq!(tightness_ratio(&a, &b, &c).unwrap(), q(3, 2));
        assert_eq!(tightness_ratio(&Zonotope3::unit_cube(), &b, &c).unwrap(), q(3, 2));
        let w = Zonotope3::new(vec![Vec3::e1(), Vec3::e2(), Vec3::e3(), v(1, 1, 1)]);
        assert_eq!(tightness_ratio(&w, &b, &c).unwrap(), q(4, 3));
    }

    #[test]
    fn tightness_names_vanishing_factor() {
        let a = Zonotope3::new(vec![Vec3::e1(), Vec3::e3()]);
        // V(A,A,[0,e1]) = 0 since every pair minor with e1 vanishes in the xz-plane
        let err = tightness_ratio(&a, &seg(Vec3::e1()), &seg(Vec3::e2())).unwrap_err();
        assert_eq!(err, Error::ZeroDenominatorFactor("V(A,A,B)"));
        let err = tightness_ratio(&Zonotope3::new(vec![Vec3::e2(), Vec3::e3()]), &seg(Vec3::e1()), &seg(Vec3::e2()))
            .unwrap_err();
        assert_eq!(err, Error::ZeroDenominatorFactor("V(A,A,C)"));
    }

    #[test]
    fn report_ratio_presence() {
        let rep = IneqReport::from_factors((r(1), r(2)), (r(0), r(3)), &r(2));
        assert_eq!(rep.ratio, None);
        assert!(!rep.holds);
        assert_eq!(rep.slack, r(-2));
        let rep = IneqReport::from_factors((r(1), r(2)), (r(1), r(3)), &r(2));
        assert_eq!(rep.ratio, Some(q(2, 3)));
        assert_eq!(rep.slack, r(4));
    }

    #[test]
    fn fuzz_examples() {
        let s = fuzz(&FuzzConfig::new(FuzzTarget::Bezout, 300, 42)).unwrap();
        assert_eq!(s.failures, 0);
        assert!(s.max_ratio.unwrap() <= q(3, 2));
        let s = fuzz(&FuzzConfig::new(FuzzTarget::Lemma, 300, 7)).unwrap();
        assert_eq!(s.failures, 0);
        assert!(!s.min_slack.is_negative());
        let s = fuzz(&FuzzConfig::new(FuzzTarget::AfSquare, 100, 3)).unwrap();
        assert_eq!(s.failures, 0);
        assert!(s.max_ratio.unwrap() <= r(2));
    }

    #[test]
    fn fuzz_is_deterministic() {
        let cfg = FuzzConfig { trials: 50, m_max: 5, coeff_bound: 9, target: FuzzTarget::Bezout, seed: 99 };
        assert_eq!(fuzz(&cfg).unwrap(), fuzz(&cfg).unwrap());
        let other = FuzzConfig { seed: 100, ..cfg.clone() };
        assert_ne!(fuzz_trials(&cfg).unwrap(), fuzz_trials(&other).unwrap());
    }

    #[test]
    fn fuzz_rejects_bad_config() {
        let base = FuzzConfig::new(FuzzTarget::Lemma, 1, 0);
        for cfg in [
            FuzzConfig { trials: 0, ..base.clone() },
            FuzzConfig { m_max: 0, ..base.clone() },
            FuzzConfig { coeff_bound: 0, ..base.clone() },
        ] {
            assert!(matches!(fuzz(&cfg), Err(Error::InvalidConfig(_))));
        }
    }

    #[test]
    fn summary_prefers_failures_for_worst_case() {
        let cfg = FuzzConfig::new(FuzzTarget::Lemma, 2, 0);
        let mk = |trial, lhs: i64, rhs: i64| TrialRecord {
            trial,
            target: FuzzTarget::Lemma,
            input: TrialInput::Lemma { vectors: vec![v(trial as i64, 0, 0)] },
            report: IneqReport::from_factors((r(lhs), r(1)), (r(rhs), r(1)), &r(1)),
        };
        let s = summarize(&cfg, &[mk(0, 1, 2), mk(1, 3, 2), mk(2, 5, 6)]);
        assert_eq!(s.failures, 1);
        assert_eq!(s.min_slack, r(-1));
        assert_eq!(s.worst_trial, 1);
        assert_eq!(s.max_ratio, Some(q(3, 2)));
        let s = summarize(&cfg, &[mk(0, 1, 2), mk(1, 5, 6), mk(2, 1, 2)]);
        assert_eq!(s.failures, 0);
        assert_eq!(s.worst_trial, 1);
    }

    #[test]
    fn bridge_identities_on_examples() {
        for vs in [equality_vectors(), vec![Vec3::e1(), Vec3::e2(), Vec3::e3(), v(1, 1, 1)], vec![v(2, -1, 0)]] {
            let (direct, via) = lemma_bridge(&vs);
            assert_eq!(direct, via);
        }
    }
}
