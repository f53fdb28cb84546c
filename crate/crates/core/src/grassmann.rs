//! Plücker coordinates of 3×n matrices.
//!
//! Subsets are 0-based sorted index triples; the text formats shift them to
//! 1-based. Iteration order is lexicographic.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::numeric::{minor3, Mat3xM, Rat};
use crate::verify::IneqReport;

pub type Triple = [usize; 3];

/// All 3×3 minors of a 3×n matrix, keyed by column triple.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PlueckerVector {
    n: usize,
    coords: BTreeMap<Triple, Rat>,
}

impl PlueckerVector {
    /// Builds a vector from explicit coordinates. Every 3-subset of `0..n`
    /// must be present exactly once.
    pub fn from_coords(n: usize, coords: impl IntoIterator<Item = (Triple, Rat)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (t, v) in coords {
            if t.iter().any(|&i| i >= n) {
                let index = *t.iter().max().unwrap();
                return Err(Error::IndexOutOfRange { index, columns: n });
            }
            if !(t[0] < t[1] && t[1] < t[2]) || map.insert(t, v).is_some() {
                return Err(Error::NonDistinctIndices(t));
            }
        }
        let expected = triples(n).count();
        if map.len() != expected {
            return Err(Error::LengthMismatch { expected, actual: map.len() });
        }
        Ok(PlueckerVector { n, coords: map })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, t: Triple) -> &Rat {
        &self.coords[&t]
    }

    /// Coordinate of an arbitrary set of three distinct indices, in any order.
    fn get_unordered(&self, mut t: Triple) -> &Rat {
        t.sort_unstable();
        self.get(t)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Triple, &Rat)> {
        self.coords.iter()
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn set(&mut self, t: Triple, v: Rat) {
        let slot = self.coords.get_mut(&t).expect("triple outside the coordinate layout");
        *slot = v;
    }
}

/// 3-subsets of `0..n` in lexicographic order.
pub fn triples(n: usize) -> impl Iterator<Item = Triple> {
    (0..n).flat_map(move |i| (i + 1..n).flat_map(move |j| (j + 1..n).map(move |k| [i, j, k])))
}

pub fn pluecker(m: &Mat3xM) -> Result<PlueckerVector> {
    let n = m.ncols();
    if n < 3 {
        return Err(Error::TooFewColumns { needed: 3, actual: n });
    }
    let coords = triples(n).map(|t| minor3(m, t).map(|v| (t, v))).collect::<Result<_>>()?;
    Ok(PlueckerVector { n, coords })
}

pub fn abs_map(p: &PlueckerVector) -> PlueckerVector {
    PlueckerVector { n: p.n, coords: p.coords.iter().map(|(t, v)| (*t, v.abs())).collect() }
}

/// One three-term Grassmann–Plücker relation, anchored at column `s` and the
/// four columns `a < b < c < d`, all distinct from `s`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GpResidual {
    pub s: usize,
    pub abcd: [usize; 4],
    /// `q_{sab}·q_{scd} − q_{sac}·q_{sbd} + q_{sad}·q_{sbc}`.
    pub residual: Rat,
}

/// Residuals of all three-term relations. For a 3×n matrix the relations
/// fix one column and pair up four others, so `n < 5` gives none.
pub fn check_gp3(p: &PlueckerVector) -> Vec<GpResidual> {
    let n = p.n;
    let mut out = Vec::new();
    for s in 0..n {
        let rest: Vec<usize> = (0..n).filter(|&i| i != s).collect();
        for (ia, &a) in rest.iter().enumerate() {
            for (ib, &b) in rest.iter().enumerate().skip(ia + 1) {
                for (ic, &c) in rest.iter().enumerate().skip(ib + 1) {
                    for &d in rest.iter().skip(ic + 1) {
                        // sorting flips every term by the same sign
                        let q = |x: usize, y: usize| p.get_unordered([s, x, y]);
                        let residual = q(a, b) * q(c, d) - q(a, c) * q(b, d) + q(a, d) * q(b, c);
                        out.push(GpResidual { s, abcd: [a, b, c, d], residual });
                    }
                }
            }
        }
    }
    out
}

/// `(Σ_{I⊆[m]} q_I)·(Σ_i q_{i,m+1,m+2}) ≤ (Σ_{S⊆[m]} q_{S∪{m+1}})·(Σ_{T⊆[m]} q_{T∪{m+2}})`
/// for a nonnegative vector on `n = m + 2` columns.
pub fn check_quad_ineq(q: &PlueckerVector, m: usize) -> Result<IneqReport> {
    if q.n != m + 2 {
        return Err(Error::LengthMismatch { expected: m + 2, actual: q.n });
    }
    if q.n < 5 {
        return Err(Error::TooFewColumns { needed: 5, actual: q.n });
    }
    if let Some(v) = q.iter().map(|(_, v)| v).find(|v| v.is_negative()) {
        return Err(Error::Negative { name: "Plücker coordinate", value: v.to_string() });
    }
    let (p1, p2) = (m, m + 1);
    let inner: Rat = triples(m).map(|t| q.get(t)).sum();
    let with_both: Rat = (0..m).map(|i| q.get([i, p1, p2])).sum();
    let pairs = || (0..m).flat_map(move |i| (i + 1..m).map(move |j| (i, j)));
    let with_first: Rat = pairs().map(|(i, j)| q.get([i, j, p1])).sum();
    let with_second: Rat = pairs().map(|(i, j)| q.get([i, j, p2])).sum();
    Ok(IneqReport::from_factors((inner, with_both), (with_first, with_second), &Rat::one()))
}
