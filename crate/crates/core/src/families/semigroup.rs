use serde_json::Value;

use super::verify::*;
use super::{params, Claim, Computed, FamilyInstance, FamilyKind};
use crate::error::Result;
use crate::field::Field;
use crate::presentation::RingPresentation;
use crate::report::Provenance::Derived;

/// `k[t^3, t^4, t^5] = k[x,y,z]/(y^2 - xz, z^2 - x^2 y, x^3 - yz)` with
/// `Q = (x)`. Not standard graded, so origin-primary tests go through the
/// saturation path.
pub fn semigroup_curve(characteristic: u32) -> Result<FamilyInstance> {
    let field = Field::with_characteristic(characteristic)?;
    let ring = RingPresentation::parse(&format!("{field}[x,y,z] / (y^2 - x*z, z^2 - x^2*y, x^3 - y*z)"))?;
    let q = ring.parse_ideal("(x)")?;
    let qc = q.clone();
    let claims = vec![
        Claim::new("origin_primary", true, Derived, "x = 0 forces t = 0 on the curve", move |_| {
            Ok(Computed::new(qc.is_origin_primary()?))
        }),
        dimension_claim("dimension", &ring, 1, Derived, "a curve"),
        length_claim("length", &q, 3, Derived, "R/(x) has basis 1, y, z"),
        multiplicity_claim("multiplicity", &q, 3, Derived, "the smallest generator of <3,4,5> is 3"),
        defect_claim("defect", &q, 0, Derived, "a one-dimensional domain is Cohen-Macaulay"),
        socle_claim("cm_type", &q, 2, Derived, "<3,4,5> has pseudo-Frobenius numbers 1 and 2"),
    ];
    Ok(FamilyInstance {
        kind: FamilyKind::SemigroupCurve,
        params: params(&[("char", Value::from(characteristic))]),
        ring: ring.clone(),
        dimension: 1,
        ideals: vec![("Q".into(), q), ("m".into(), ring.max_ideal()?)],
        claims,
        samples: None,
    })
}
