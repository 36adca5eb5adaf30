//! Concrete ring families with tables of expected invariants, and the driver
//! that recomputes every entry.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde_json::Value;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::presentation::RingPresentation;
use crate::report::Provenance;

mod counterexample;
mod fiber;
mod field_ext;
mod regular;
mod semigroup;
mod verify;

pub use counterexample::counterexample_ring;
pub use fiber::fiber_product_ring;
pub use field_ext::{default_minpoly, field_extension_ring};
pub use regular::regular_param_scenarios;
pub use semigroup::semigroup_curve;
pub use verify::{verify, verify_all, VerifyConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    /// `S/a` with `a = (X_1..X_{m-1})^2 + (X_m^2) + (X_i V) + (V^2 - sum A_i X_i)`,
    /// where `I^2 != QI` for `Q = (a)`.
    Counterexample,
    /// `k[X, Y]/(X_i Y_j)`: two regular components glued at the origin.
    FiberProduct,
    /// `k[theta_i X_j]` inside `K[X]` for a quadratic extension `K/k`.
    FieldExtension,
    /// Parameter ideals of a polynomial ring.
    RegularParam,
    /// The monomial curve with semigroup `<3,4,5>`.
    SemigroupCurve,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 5] = [
        FamilyKind::Counterexample,
        FamilyKind::FiberProduct,
        FamilyKind::FieldExtension,
        FamilyKind::RegularParam,
        FamilyKind::SemigroupCurve,
    ];

    /// Tag written into reports.
    pub fn tag(self) -> &'static str {
        match self {
            FamilyKind::Counterexample => "counterexample",
            FamilyKind::FiberProduct => "fiber-product",
            FamilyKind::FieldExtension => "field-extension",
            FamilyKind::RegularParam => "regular-param",
            FamilyKind::SemigroupCurve => "semigroup-curve",
        }
    }

    /// Short name used on the command line.
    pub fn short_name(self) -> &'static str {
        match self {
            FamilyKind::Counterexample => "counterexample",
            FamilyKind::FiberProduct => "fiber",
            FamilyKind::FieldExtension => "field-ext",
            FamilyKind::RegularParam => "regular",
            FamilyKind::SemigroupCurve => "semigroup",
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.tag() == s || k.short_name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = FamilyKind::ALL.iter().map(|k| k.short_name()).collect();
                Error::Precondition(format!("unknown family `{s}` (expected one of {})", names.join(", ")))
            })
    }
}

/// What a claim is expected to evaluate to.
#[derive(Clone, Debug, PartialEq)]
pub enum Expectation {
    Exact(Value),
    /// Competing values from different sources; the row is flagged and
    /// never passes or fails.
    Candidates(Vec<(String, Value)>),
}

impl Expectation {
    pub fn to_json(&self) -> Value {
        match self {
            Expectation::Exact(v) => v.clone(),
            Expectation::Candidates(c) => {
                let map: serde_json::Map<String, Value> = c.iter().map(|(k, v)| (k.clone(), v.clone())).collect();
                serde_json::json!({ "candidates": map })
            }
        }
    }
}

/// Result of running a claim's probe.
#[derive(Clone, Debug, PartialEq)]
pub struct Computed {
    pub value: Value,
    pub note: Option<String>,
}

impl Computed {
    pub fn new(value: impl Into<Value>) -> Self {
        Computed { value: value.into(), note: None }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

pub type Probe = Arc<dyn Fn(&VerifyConfig) -> Result<Computed> + Send + Sync>;

/// One row of an expected-values table.
#[derive(Clone)]
pub struct Claim {
    pub id: String,
    pub expected: Expectation,
    pub provenance: Provenance,
    /// The statement being checked, or how the expected value was obtained.
    pub citation: String,
    probe: Probe,
}

impl Claim {
    pub fn new(
        id: impl Into<String>,
        expected: impl Into<Value>,
        provenance: Provenance,
        citation: impl Into<String>,
        probe: impl Fn(&VerifyConfig) -> Result<Computed> + Send + Sync + 'static,
    ) -> Claim {
        Claim {
            id: id.into(),
            expected: Expectation::Exact(expected.into()),
            provenance,
            citation: citation.into(),
            probe: Arc::new(probe),
        }
    }

    pub fn flagged(
        id: impl Into<String>,
        candidates: Vec<(String, Value)>,
        provenance: Provenance,
        citation: impl Into<String>,
        probe: impl Fn(&VerifyConfig) -> Result<Computed> + Send + Sync + 'static,
    ) -> Claim {
        Claim {
            id: id.into(),
            expected: Expectation::Candidates(candidates),
            provenance,
            citation: citation.into(),
            probe: Arc::new(probe),
        }
    }

    pub fn run(&self, config: &VerifyConfig) -> Result<Computed> {
        (self.probe)(config)
    }
}

impl fmt::Debug for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Claim")
            .field("id", &self.id)
            .field("expected", &self.expected)
            .field("provenance", &self.provenance)
            .field("citation", &self.citation)
            .finish_non_exhaustive()
    }
}

/// Expected value for a per-sample check.
#[derive(Clone, Debug, PartialEq)]
pub struct SampleExpectation {
    pub value: Value,
    pub provenance: Provenance,
    pub citation: String,
}

impl SampleExpectation {
    pub fn new(value: impl Into<Value>, provenance: Provenance, citation: impl Into<String>) -> Self {
        SampleExpectation { value: value.into(), provenance, citation: citation.into() }
    }
}

/// What to check on each sampled parameter ideal.
#[derive(Clone, Debug, PartialEq)]
pub struct SamplePlan {
    pub multiplicity: SampleExpectation,
    pub defect: SampleExpectation,
    /// Expected stability index of `Q : m` over `Q`, when one is claimed.
    pub stability: Option<SampleExpectation>,
    /// Add inhomogeneous terms to the sampled generators.
    pub perturb: bool,
}

/// A ring from one of the families together with its distinguished ideals
/// and the claims to check.
#[derive(Clone, Debug)]
pub struct FamilyInstance {
    pub kind: FamilyKind,
    pub params: BTreeMap<String, Value>,
    pub ring: Arc<RingPresentation>,
    pub dimension: usize,
    ideals: Vec<(String, Ideal)>,
    pub claims: Vec<Claim>,
    pub samples: Option<SamplePlan>,
}

impl FamilyInstance {
    pub fn characteristic(&self) -> u32 {
        self.ring.field().characteristic()
    }

    pub fn ideals(&self) -> &[(String, Ideal)] {
        &self.ideals
    }

    pub fn ideal(&self, name: &str) -> Option<&Ideal> {
        self.ideals.iter().find(|(n, _)| n == name).map(|(_, i)| i)
    }

    /// The default parameter ideal.
    pub fn q(&self) -> &Ideal {
        self.ideal("Q").expect("every family instance has a parameter ideal Q")
    }

    pub fn claim(&self, id: &str) -> Option<&Claim> {
        self.claims.iter().find(|c| c.id == id)
    }
}

/// Builds the instances named `family` with the given parameters. Only the
/// regular scenarios produce more than one instance.
pub fn build_family(
    family: FamilyKind,
    m: Option<usize>,
    d: Option<usize>,
    characteristic: u32,
    minpoly: Option<&str>,
) -> Result<Vec<FamilyInstance>> {
    let need = |v: Option<usize>, name: &str| {
        v.ok_or_else(|| Error::Precondition(format!("family `{family}` needs --{name}")))
    };
    Ok(match family {
        FamilyKind::Counterexample => vec![counterexample_ring(need(m, "m")?, need(d, "d")?, characteristic)?],
        FamilyKind::FiberProduct => vec![fiber_product_ring(need(d, "d")?, characteristic)?],
        FamilyKind::FieldExtension => vec![field_extension_ring(d.unwrap_or(2), minpoly, characteristic)?],
        FamilyKind::RegularParam => regular_param_scenarios(characteristic)?,
        FamilyKind::SemigroupCurve => vec![semigroup_curve(characteristic)?],
    })
}

pub(crate) fn params(pairs: &[(&str, Value)]) -> BTreeMap<String, Value> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

/// `computed == expected` for two ideals, with a witness in the note when
/// they differ.
pub(crate) fn ideal_equality(a: &Ideal, b: &Ideal) -> Result<Computed> {
    if let Some(w) = a.containment_witness(b)? {
        return Ok(Computed::new(false).with_note(format!("{w} lies in the left side only")));
    }
    if let Some(w) = b.containment_witness(a)? {
        return Ok(Computed::new(false).with_note(format!("{w} lies in the right side only")));
    }
    Ok(Computed::new(true))
}
