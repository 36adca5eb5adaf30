use serde_json::Value;

use super::verify::*;
use super::{params, FamilyInstance, FamilyKind, SampleExpectation, SamplePlan};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::presentation::RingPresentation;
use crate::report::Provenance::{Derived, Published};

/// `k[X_1..X_d, Y_1..Y_d]/(X_i Y_j)` with components `p1 = (x)`, `p2 = (y)`
/// and `Q = (x_i + y_i)`.
pub fn fiber_product_ring(d: usize, characteristic: u32) -> Result<FamilyInstance> {
    if d == 0 {
        return Err(Error::Precondition("need d >= 1".into()));
    }
    let field = Field::with_characteristic(characteristic)?;
    let xs: Vec<String> = (1..=d).map(|i| format!("x{i}")).collect();
    let ys: Vec<String> = (1..=d).map(|i| format!("y{i}")).collect();
    let mut rels = Vec::new();
    for x in &xs {
        for y in &ys {
            rels.push(format!("{x}*{y}"));
        }
    }
    let names = [xs.clone(), ys.clone()].concat();
    let ring = RingPresentation::parse(&format!("{field}[{}] / ({})", names.join(","), rels.join(", ")))?;

    let q_gens: Vec<String> = (1..=d).map(|i| format!("x{i} + y{i}")).collect();
    let q = ring.parse_ideal(&format!("({})", q_gens.join(", ")))?;
    let p1 = ring.parse_ideal(&format!("({})", xs.join(", ")))?;
    let p2 = ring.parse_ideal(&format!("({})", ys.join(", ")))?;
    let max = ring.max_ideal()?;
    let du = d as u64;

    let mut claims = vec![
        dimension_claim("dimension", &ring, d, Derived, "both components are d-dimensional: maximal independent sets {X}, {Y}"),
        length_claim("length", &q, du + 1, Derived, "setting y_i = -x_i leaves k[x]/(x)^2, of length d + 1"),
        multiplicity_claim("multiplicity", &q, 2, Derived, "e = e(A/p1) + e(A/p2) = 1 + 1"),
        defect_claim("defect", &q, du - 1, Derived, "length d + 1 minus multiplicity 2"),
    ];
    {
        let (p1, p2) = (p1.clone(), p2.clone());
        let zero = ring.zero_ideal();
        claims.push(equality_claim("components.intersection", true, Published, "p1 ∩ p2 = (0)", move || {
            Ok((p1.intersect(&p2)?, zero.clone()))
        }));
    }
    {
        let (p1, p2) = (p1.clone(), p2.clone());
        let zero = ring.zero_ideal();
        claims.push(equality_claim(
            "components.product",
            true,
            Derived,
            "p1 p2 = (0): every X_i Y_j is a defining relation",
            move || Ok((p1.product(&p2)?, zero.clone())),
        ));
    }
    {
        let (p1, p2, max) = (p1.clone(), p2.clone(), max.clone());
        claims.push(equality_claim("components.sum", true, Published, "p1 + p2 = m", move || Ok((p1.sum(&p2)?, max.clone()))));
    }
    if d == 1 {
        let (q2, max2) = (q.clone(), max.clone());
        claims.push(equality_claim(
            "colon_by_max",
            true,
            Derived,
            "x(x + y) = x^2 and y(x + y) = y^2 modulo xy, so Q : m = m",
            move || Ok((q2.colon(&max2)?, max2.clone())),
        ));
        claims.push(socle_claim("cm_type", &q, 1, Derived, "k[x,y]/(xy) is a Gorenstein hypersurface"));
    }
    claims.extend([
        stability_of_colon_claim(
            "stability",
            &q,
            stability_expectation(1),
            Published,
            "I^2 = QI for every parameter ideal Q of a Buchsbaum ring with e = 2 and positive depth",
        ),
        generator_count_claim("generator_count", &q, d),
        depth_bound_claim(
            "depth_lower_bound",
            &ring,
            1,
            Derived,
            "two regular rings glued at a point have depth 1: a general form is regular, the next one is not",
        ),
    ]);
    if d <= 2 {
        claims.push(depth_claim("depth", &q, 1, Derived, "depth 1, certified by one regular form and, for d = 2, a positive defect"));
    }
    claims.push(flagged_defect_claim(
        "buchsbaum_invariant",
        &q,
        vec![("stated".into(), Value::from(du)), ("cohomology_sum".into(), Value::from(du - 1))],
        "the invariant is stated to be d, while summing binomial(d-1, i) h^i with h^1 = 1 gives d - 1",
    ));

    Ok(FamilyInstance {
        kind: FamilyKind::FiberProduct,
        params: params(&[("d", Value::from(du)), ("char", Value::from(characteristic))]),
        ring,
        dimension: d,
        ideals: vec![("Q".into(), q), ("m".into(), max), ("p1".into(), p1), ("p2".into(), p2)],
        claims,
        samples: Some(SamplePlan {
            multiplicity: SampleExpectation::new(2, Derived, "a general parameter ideal is a minimal reduction of m, e = 2"),
            defect: SampleExpectation::new(du - 1, Derived, "equal to the defect d - 1 of (x_i + y_i)"),
            stability: Some(SampleExpectation::new(
                stability_expectation(1),
                Published,
                "I^2 = QI for every parameter ideal Q of a Buchsbaum ring with e = 2 and positive depth",
            )),
            perturb: false,
        }),
    })
}
