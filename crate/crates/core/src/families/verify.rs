use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;
use serde_json::{json, Value};

use super::{Claim, Computed, Expectation, FamilyInstance, SampleExpectation, SamplePlan};
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::invariants::{self, classify_depth, depth_probe};
use crate::presentation::RingPresentation;
use crate::report::{InstanceDescriptor, Provenance, Row, VerificationReport, SCHEMA};
use crate::sampling::ParameterSampler;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Parameter ideals sampled per instance.
    pub samples: usize,
    pub seed: u64,
    /// Largest `n` tried by stability checks.
    pub kmax: u32,
    /// Hilbert–Samuel window; `None` means `dim + 6`.
    pub nmax: Option<usize>,
    pub depth_trials: usize,
    /// Record wall time per row. Off by default so reports are byte-stable.
    pub timings: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { samples: 10, seed: 7, kmax: 4, nmax: None, depth_trials: 3, timings: false }
    }
}

/// Checks every claim of `instance` and of its sampled parameter ideals.
pub fn verify(instance: &FamilyInstance, config: &VerifyConfig) -> Result<VerificationReport> {
    verify_all(std::slice::from_ref(instance), config)
}

/// One report covering several instances of the same family.
pub fn verify_all(instances: &[FamilyInstance], config: &VerifyConfig) -> Result<VerificationReport> {
    let first = instances.first().ok_or_else(|| Error::Precondition("no instances to verify".into()))?;
    let mut claims: Vec<Claim> = Vec::new();
    let mut sample_rows: Vec<Row> = Vec::new();
    let mut defect_groups: Vec<(Vec<String>, SampleExpectation)> = Vec::new();
    for inst in instances {
        claims.extend(inst.claims.iter().cloned());
        if let (Some(plan), true) = (&inst.samples, config.samples > 0) {
            let (mut extra, defect_ids, failure) = sample_claims(inst, plan, config);
            defect_groups.push((defect_ids, plan.defect.clone()));
            claims.append(&mut extra);
            sample_rows.extend(failure);
        }
    }
    let mut rows: Vec<Row> = claims.par_iter().map(|c| run_claim(c, config)).collect();
    rows.extend(sample_rows);
    for (ids, expect) in defect_groups {
        if !ids.is_empty() {
            let row = constancy_row(&rows, &ids, &expect);
            rows.push(row);
        }
    }

    let rings: Vec<String> = instances.iter().map(|i| i.ring.to_string()).collect();
    Ok(VerificationReport {
        schema: SCHEMA.into(),
        tool_version: crate::VERSION.into(),
        instance: InstanceDescriptor {
            family: first.kind.tag().into(),
            params: first.params.clone(),
            ring: rings.join("; "),
        },
        field_characteristic: first.characteristic(),
        seed: config.seed,
        samples: config.samples,
        rows,
    })
}

fn run_claim(claim: &Claim, config: &VerifyConfig) -> Row {
    let start = Instant::now();
    let outcome = if claim.citation.trim().is_empty() {
        Err(Error::Precondition(format!("claim `{}` has no citation", claim.id)))
    } else {
        claim.run(config)
    };
    let wall_ms = config.timings.then(|| start.elapsed().as_millis() as u64);
    let flagged = matches!(claim.expected, Expectation::Candidates(_));
    let (computed, pass, note, error) = match outcome {
        Ok(c) => {
            let pass = match &claim.expected {
                Expectation::Exact(v) => Some(&c.value == v),
                Expectation::Candidates(_) => None,
            };
            (Some(c.value), pass, c.note, None)
        }
        Err(e) => (None, Some(false), None, Some(e.to_string())),
    };
    Row {
        claim: claim.id.clone(),
        citation: claim.citation.clone(),
        provenance: claim.provenance,
        expected: claim.expected.to_json(),
        computed,
        pass,
        flagged,
        note,
        error,
        wall_ms,
    }
}

/// Claims for sampled parameter ideals, the ids of the defect rows, and an
/// error row if sampling gave up.
fn sample_claims(inst: &FamilyInstance, plan: &SamplePlan, config: &VerifyConfig) -> (Vec<Claim>, Vec<String>, Option<Row>) {
    let mut sampler = ParameterSampler::new(config.seed).with_perturbation(plan.perturb);
    let mut claims = Vec::new();
    let mut defect_ids = Vec::new();
    let identity_applies = plan.multiplicity.value.as_u64().is_some_and(|e| e >= 2);
    for k in 1..=config.samples {
        let q = match sampler.parameter_ideal(&inst.ring, inst.dimension) {
            Ok(q) => q,
            Err(e) => {
                let row = Row {
                    claim: format!("sample{k}"),
                    citation: "seeded parameter ideal".into(),
                    provenance: Provenance::Elementary,
                    expected: Value::Null,
                    computed: None,
                    pass: Some(false),
                    flagged: false,
                    note: None,
                    error: Some(e.to_string()),
                    wall_ms: None,
                };
                return (claims, defect_ids, Some(row));
            }
        };
        let id = |what: &str| format!("sample{k}.{what}");
        let e = &plan.multiplicity;
        let qc = q.clone();
        claims.push(Claim::new(id("multiplicity"), e.value.clone(), e.provenance, e.citation.clone(), move |cfg| {
            let m = invariants::multiplicity_with(&qc, cfg.nmax)?;
            Ok(Computed::new(m.value).with_note(format!("Q = {qc}")))
        }));
        let e = &plan.defect;
        claims.push(defect_claim(&id("defect"), &q, e.value.clone(), e.provenance, &e.citation));
        defect_ids.push(id("defect"));
        if let Some(e) = &plan.stability {
            claims.push(stability_of_colon_claim(&id("stability"), &q, e.value.clone(), e.provenance, &e.citation));
        }
        if identity_applies {
            claims.push(generator_count_claim(&id("generator_count"), &q, inst.dimension));
        }
    }
    (claims, defect_ids, None)
}

fn constancy_row(rows: &[Row], ids: &[String], expect: &SampleExpectation) -> Row {
    let values: Vec<Option<&Value>> =
        ids.iter().map(|id| rows.iter().find(|r| &r.claim == id).and_then(|r| r.computed.as_ref())).collect();
    let all_present = values.iter().all(Option::is_some);
    let constant = all_present && values.windows(2).all(|w| w[0] == w[1]);
    let listed: Vec<String> = values.iter().map(|v| v.map_or("error".into(), Value::to_string)).collect();
    Row {
        claim: "samples.defect_constant".into(),
        citation: format!("length minus multiplicity is the same for every parameter ideal ({})", expect.citation),
        provenance: expect.provenance,
        expected: Value::Bool(true),
        computed: all_present.then_some(Value::Bool(constant)),
        pass: Some(constant),
        flagged: false,
        note: Some(format!("defects: [{}]", listed.join(", "))),
        error: (!all_present).then(|| "a sampled defect could not be computed".to_string()),
        wall_ms: None,
    }
}

// Probes shared by the family tables.

pub(crate) fn dimension_claim(id: &str, ring: &Arc<RingPresentation>, expected: usize, prov: Provenance, cite: &str) -> Claim {
    let ring = ring.clone();
    Claim::new(id, expected as u64, prov, cite, move |_| Ok(Computed::new(ring.dimension()? as u64)))
}

pub(crate) fn length_claim(id: &str, q: &Ideal, expected: u64, prov: Provenance, cite: &str) -> Claim {
    let q = q.clone();
    Claim::new(id, expected, prov, cite, move |_| Ok(Computed::new(invariants::length(&q)?)))
}

pub(crate) fn multiplicity_claim(id: &str, q: &Ideal, expected: u64, prov: Provenance, cite: &str) -> Claim {
    let q = q.clone();
    Claim::new(id, expected, prov, cite, move |cfg| {
        let m = invariants::multiplicity_with(&q, cfg.nmax)?;
        Ok(Computed::new(m.value).with_note(format!("colengths {:?}", m.colengths)))
    })
}

fn defect_of(q: &Ideal, config: &VerifyConfig) -> Result<(i64, u64, u64)> {
    let len = invariants::length(q)?;
    let e = invariants::multiplicity_with(q, config.nmax)?.value;
    Ok((len as i64 - e as i64, len, e))
}

pub(crate) fn defect_claim(id: &str, q: &Ideal, expected: impl Into<Value>, prov: Provenance, cite: &str) -> Claim {
    let q = q.clone();
    Claim::new(id, expected, prov, cite, move |cfg| {
        let (defect, len, e) = defect_of(&q, cfg)?;
        Ok(Computed::new(defect).with_note(format!("length {len}, multiplicity {e}")))
    })
}

/// Flagged row: the measured defect against competing predictions.
pub(crate) fn flagged_defect_claim(id: &str, q: &Ideal, candidates: Vec<(String, Value)>, cite: &str) -> Claim {
    let q = q.clone();
    Claim::flagged(id, candidates, Provenance::Published, cite, move |cfg| {
        let (defect, len, e) = defect_of(&q, cfg)?;
        Ok(Computed::new(defect).with_note(format!("measured length {len} minus multiplicity {e}")))
    })
}

fn stability_value(i: &Ideal, q: &Ideal, kmax: u32) -> Result<Value> {
    let st = invariants::stability_index(i, q, kmax)?;
    Ok(json!({ "index": st.index, "checks": st.checks }))
}

/// `{"index": n, "checks": [...]}` for `I = Q : m`.
pub(crate) fn stability_of_colon_claim(id: &str, q: &Ideal, expected: Value, prov: Provenance, cite: &str) -> Claim {
    let q = q.clone();
    Claim::new(id, expected, prov, cite, move |cfg| {
        let i = q.colon(&q.presentation().max_ideal()?)?;
        Ok(Computed::new(stability_value(&i, &q, cfg.kmax)?))
    })
}

/// Only the index, for cases where the number of checks depends on `kmax`.
pub(crate) fn stability_index_claim(id: &str, i: &Ideal, q: &Ideal, expected: Option<u32>, prov: Provenance, cite: &str) -> Claim {
    let (i, q) = (i.clone(), q.clone());
    Claim::new(id, expected, prov, cite, move |cfg| {
        let st = invariants::stability_index(&i, &q, cfg.kmax)?;
        Ok(Computed::new(st.index).with_note(format!("checks {:?}", st.checks)))
    })
}

pub(crate) fn stability_expectation(index: u32) -> Value {
    let checks: Vec<bool> = (1..=index).map(|n| n == index).collect();
    json!({ "index": index, "checks": checks })
}

/// `μ(Q : m) = ℓ((Q : m)/Q) + d`, which needs `e(Q) >= 2`.
pub(crate) fn generator_count_claim(id: &str, q: &Ideal, d: usize) -> Claim {
    let q = q.clone();
    Claim::new(
        id,
        true,
        Provenance::Published,
        "when the multiplicity is at least 2, Q : m needs exactly length((Q : m)/Q) + d generators",
        move |cfg| {
            let e = invariants::multiplicity_with(&q, cfg.nmax)?.value;
            if e < 2 {
                return Err(Error::Precondition(format!("multiplicity {e} is below 2")));
            }
            let i = q.colon(&q.presentation().max_ideal()?)?;
            let mu = invariants::min_generators(&i)?;
            let rel = invariants::relative_length(&q, &i)?;
            Ok(Computed::new(mu == rel + d as u64)
                .with_note(format!("mu = {mu}, length(I/Q) = {rel}, d = {d}")))
        },
    )
}

/// Depth settled by a certified regular sequence plus the defect of `q`.
pub(crate) fn depth_claim(id: &str, q: &Ideal, expected: u64, prov: Provenance, cite: &str) -> Claim {
    let q = q.clone();
    Claim::new(id, expected, prov, cite, move |cfg| {
        let probe = depth_probe(q.presentation(), cfg.depth_trials, cfg.seed)?;
        let (defect, _, _) = defect_of(&q, cfg)?;
        let witness: Vec<String> = probe.witness.iter().map(|f| f.to_string()).collect();
        let depth = classify_depth(&probe, defect).map(|d| d as u64);
        Ok(Computed::new(depth).with_note(format!(
            "certified regular sequence of length {} [{}]; defect {defect}",
            probe.bound,
            witness.join(", ")
        )))
    })
}

pub(crate) fn depth_bound_claim(id: &str, ring: &Arc<RingPresentation>, expected: u64, prov: Provenance, cite: &str) -> Claim {
    let ring = ring.clone();
    Claim::new(id, expected, prov, cite, move |cfg| {
        Ok(Computed::new(depth_probe(&ring, cfg.depth_trials, cfg.seed)?.bound as u64))
    })
}

pub(crate) fn socle_claim(id: &str, j: &Ideal, expected: u64, prov: Provenance, cite: &str) -> Claim {
    let j = j.clone();
    Claim::new(id, expected, prov, cite, move |_| Ok(Computed::new(invariants::socle(&j)?.length)))
}

/// Equality of two ideals built lazily by `build`.
pub(crate) fn equality_claim(
    id: &str,
    expected: bool,
    prov: Provenance,
    cite: &str,
    build: impl Fn() -> Result<(Ideal, Ideal)> + Send + Sync + 'static,
) -> Claim {
    Claim::new(id, expected, prov, cite, move |_| {
        let (a, b) = build()?;
        super::ideal_equality(&a, &b)
    })
}
