use serde_json::Value;

use super::verify::*;
use super::{params, FamilyInstance, FamilyKind};
use crate::error::Result;
use crate::field::Field;
use crate::presentation::RingPresentation;
use crate::report::Provenance::{Elementary, Published};

/// Parameter ideals of `k[x,y]` and `k[x]`. In `k[x,y]` the socle of
/// `m/Qm` has length 2 when `Q = (x, y^q)` is integrally closed and
/// `type + 2 = 3` otherwise.
pub fn regular_param_scenarios(characteristic: u32) -> Result<Vec<FamilyInstance>> {
    let field = Field::with_characteristic(characteristic)?;
    let plane = RingPresentation::parse(&format!("{field}[x,y]"))?;
    let max = plane.max_ideal()?;
    let q = plane.parse_ideal("(x, y)")?;
    let closed = plane.parse_ideal("(x, y^3)")?;
    let open = plane.parse_ideal("(x^2, y^2)")?;
    let plane_claims = vec![
        socle_claim(
            "plane.socle_closed",
            &closed.product(&max)?,
            2,
            Published,
            "the socle of m/Qm has length d for Q = (x, y^q), which is integrally closed",
        ),
        socle_claim(
            "plane.socle_open",
            &open.product(&max)?,
            3,
            Published,
            "the socle of m/Qm has length type + d for Q = (x^2, y^2), which is not integrally closed",
        ),
        socle_claim("plane.socle_max", &q.product(&max)?, 2, Elementary, "Q = m is (x, y^q) with q = 1"),
        socle_claim("plane.cm_type", &q, 1, Elementary, "a regular ring is Gorenstein"),
        depth_claim("plane.depth", &q, 2, Elementary, "x, y is a regular sequence"),
        defect_claim("plane.defect", &closed, 0, Elementary, "parameter ideals of a regular ring are complete intersections"),
    ];
    let plane_inst = FamilyInstance {
        kind: FamilyKind::RegularParam,
        params: params(&[("char", Value::from(characteristic))]),
        ring: plane.clone(),
        dimension: 2,
        ideals: vec![("Q".into(), q), ("m".into(), max), ("Q_closed".into(), closed), ("Q_open".into(), open)],
        claims: plane_claims,
        samples: None,
    };

    let line = RingPresentation::parse(&format!("{field}[x]"))?;
    let q = line.parse_ideal("(x^2)")?;
    let i = line.parse_ideal("(x)")?;
    let line_inst = FamilyInstance {
        kind: FamilyKind::RegularParam,
        params: params(&[("char", Value::from(characteristic))]),
        ring: line.clone(),
        dimension: 1,
        claims: vec![stability_index_claim(
            "line.stability",
            &i,
            &q,
            None,
            Elementary,
            "(x)^(n+1) = (x^(n+1)) never equals (x^2)(x)^n = (x^(n+2))",
        )],
        ideals: vec![("Q".into(), q), ("I".into(), i)],
        samples: None,
    };
    Ok(vec![plane_inst, line_inst])
}
