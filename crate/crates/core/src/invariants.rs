//! Numerical invariants of `R` at the origin: lengths, socles, generator
//! counts, Hilbert–Samuel colengths, multiplicity, defect, depth and type.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::artinian::{ArtinianQuotient, DEFAULT_LENGTH_CAP};
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::poly::Polynomial;
use crate::presentation::RingPresentation;
use crate::sampling::ParameterSampler;

/// `ℓ(R/J)` for origin-primary `J`.
pub fn length(j: &Ideal) -> Result<u64> {
    Ok(ArtinianQuotient::new(j)?.length())
}

/// `ℓ(outer/inner) = ℓ(R/inner) - ℓ(R/outer)`; requires `inner ⊆ outer`.
pub fn relative_length(inner: &Ideal, outer: &Ideal) -> Result<u64> {
    if let Some(w) = inner.containment_witness(outer)? {
        return Err(Error::NotContained { witness: w.to_string() });
    }
    Ok(length(inner)? - length(outer)?)
}

#[derive(Clone, Debug)]
pub struct Socle {
    /// `J : m`.
    pub ideal: Ideal,
    /// `ℓ((J : m)/J)`.
    pub length: u64,
}

pub fn socle(j: &Ideal) -> Result<Socle> {
    j.origin_primary_check()?;
    let m = j.presentation().max_ideal()?;
    let colon = j.colon(&m)?;
    let length = relative_length(j, &colon)?;
    Ok(Socle { ideal: colon, length })
}

/// `μ(I) = ℓ(I/mI)`.
pub fn min_generators(i: &Ideal) -> Result<u64> {
    let m = i.presentation().max_ideal()?;
    let mi = m.product(i)?;
    Ok(length(&mi)? - length(i)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertSamuel {
    /// `ℓ(R/q^n)` for `n = 1, 2, ...`.
    pub colengths: Vec<u64>,
    /// Set when a length exceeded the cap and the sequence stops early.
    pub truncated: bool,
}

/// `ℓ(R/q^n)` for `n = 1..=nmax`, with `nmax >= dim R + 2`.
pub fn hilbert_samuel(q: &Ideal, nmax: usize) -> Result<HilbertSamuel> {
    hilbert_samuel_capped(q, nmax, DEFAULT_LENGTH_CAP)
}

pub fn hilbert_samuel_capped(q: &Ideal, nmax: usize, cap: usize) -> Result<HilbertSamuel> {
    let d = q.presentation().dimension()?;
    if nmax < d + 2 {
        return Err(Error::Precondition(format!("nmax = {nmax} is below dim + 2 = {}", d + 2)));
    }
    q.origin_primary_check()?;
    let mut colengths = Vec::with_capacity(nmax);
    let mut power = q.clone();
    for n in 1..=nmax {
        match ArtinianQuotient::with_cap(&power, cap) {
            Ok(a) => colengths.push(a.length()),
            Err(Error::ResourceCap(_)) => return Ok(HilbertSamuel { colengths, truncated: true }),
            Err(e) => return Err(e),
        }
        if n < nmax {
            power = power.compact()?.product(q)?;
        }
    }
    Ok(HilbertSamuel { colengths, truncated: false })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Multiplicity {
    pub value: u64,
    pub dimension: usize,
    /// The colengths used, `ℓ(R/q^n)` from `n = 1`.
    pub colengths: Vec<u64>,
}

pub fn default_nmax(dimension: usize) -> usize {
    dimension + 6
}

/// `e(q)` with the default window `nmax = dim R + 6`.
pub fn multiplicity(q: &Ideal) -> Result<u64> {
    Ok(multiplicity_with(q, None)?.value)
}

/// The `d`-th difference of `0, ℓ(R/q), ℓ(R/q^2), ...`, accepted once two
/// consecutive values agree.
pub fn multiplicity_with(q: &Ideal, nmax: Option<usize>) -> Result<Multiplicity> {
    let d = q.presentation().dimension()?;
    let nmax = nmax.unwrap_or_else(|| default_nmax(d));
    if q.gens().len() < d {
        return Err(Error::Precondition(format!(
            "{} generators cannot generate a parameter ideal in dimension {d}",
            q.gens().len()
        )));
    }
    q.origin_primary_check()?;
    let mut seq: Vec<u64> = vec![0];
    let mut power = q.clone();
    let mut prev: Option<i128> = None;
    for n in 1..=nmax {
        if n > 1 {
            power = power.compact()?.product(q)?;
        }
        seq.push(ArtinianQuotient::new(&power)?.length());
        if n < d {
            continue;
        }
        let diff = finite_difference(&seq, d);
        if prev == Some(diff) && diff >= 1 {
            return Ok(Multiplicity { value: diff as u64, dimension: d, colengths: seq[1..].to_vec() });
        }
        prev = Some(diff);
    }
    Err(Error::PostulationNotReached { nmax, sequence: seq[1..].to_vec() })
}

/// `d`-th backward difference at the last entry.
fn finite_difference(seq: &[u64], d: usize) -> i128 {
    let n = seq.len() - 1;
    let mut binom: i128 = 1;
    let mut acc: i128 = 0;
    for k in 0..=d {
        let term = binom * seq[n - k] as i128;
        acc += if k % 2 == 0 { term } else { -term };
        binom = binom * (d - k) as i128 / (k + 1) as i128;
    }
    acc
}

/// `ℓ(R/q) - e(q)`.
pub fn buchsbaum_defect(q: &Ideal) -> Result<i64> {
    Ok(length(q)? as i64 - multiplicity(q)? as i64)
}

#[derive(Clone, Debug)]
pub struct DepthProbe {
    /// Longest sequence of linear forms certified regular.
    pub bound: usize,
    pub witness: Vec<Polynomial>,
    pub dimension: usize,
}

/// Greedy random search for a regular sequence of linear forms. Each form
/// `f` is certified by `(prev) : f = (prev)`.
pub fn depth_probe(pres: &Arc<RingPresentation>, trials: usize, seed: u64) -> Result<DepthProbe> {
    let dimension = pres.dimension()?;
    let mut sampler = ParameterSampler::new(seed);
    let mut best: Vec<Polynomial> = Vec::new();
    for _ in 0..trials.max(1) {
        let mut prev = pres.zero_ideal();
        let mut seq = Vec::new();
        while seq.len() < dimension {
            let f = sampler.linear_form(pres);
            if !prev.colon_poly(&f)?.equals(&prev)? {
                break;
            }
            prev = prev.sum(&Ideal::new(pres, vec![f.clone()])?)?;
            seq.push(f);
        }
        if seq.len() > best.len() {
            best = seq;
        }
        if best.len() == dimension {
            break;
        }
    }
    Ok(DepthProbe { bound: best.len(), witness: best, dimension })
}

/// Depth when the probe and a defect settle it: the bound reaches the
/// dimension, or a positive defect rules out `d` and the bound is `d - 1`.
pub fn classify_depth(probe: &DepthProbe, defect: i64) -> Option<usize> {
    if probe.bound == probe.dimension {
        return Some(probe.dimension);
    }
    if defect > 0 && probe.bound + 1 == probe.dimension {
        return Some(probe.bound);
    }
    None
}

/// Cohen–Macaulay type `ℓ((Q : m)/Q)`; refuses a parameter ideal with
/// nonzero defect.
pub fn cm_type(q: &Ideal) -> Result<u64> {
    let defect = buchsbaum_defect(q)?;
    if defect != 0 {
        return Err(Error::NotCohenMacaulay { defect });
    }
    Ok(socle(q)?.length)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stability {
    /// Least `n` with `I^(n+1) = Q I^n`.
    pub index: Option<u32>,
    /// Outcome of the test for `n = 1, 2, ...` as far as it ran.
    pub checks: Vec<bool>,
}

/// Least `n <= kmax` with `I^(n+1) = Q I^n`; requires `Q ⊆ I`.
pub fn stability_index(i: &Ideal, q: &Ideal, kmax: u32) -> Result<Stability> {
    if let Some(w) = q.containment_witness(i)? {
        return Err(Error::NotContained { witness: w.to_string() });
    }
    let mut checks = Vec::new();
    let mut power = i.clone();
    for n in 1..=kmax {
        let base = power.compact()?;
        let next = base.product(i)?;
        let equal = next.equals(&q.product(&base)?)?;
        checks.push(equal);
        if equal {
            return Ok(Stability { index: Some(n), checks });
        }
        power = next;
    }
    Ok(Stability { index: None, checks })
}
