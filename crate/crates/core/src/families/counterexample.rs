use serde_json::Value;

use super::verify::*;
use super::{params, FamilyInstance, FamilyKind, SampleExpectation, SamplePlan};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::presentation::RingPresentation;
use crate::report::Provenance::{Derived, Published};

/// `R = k[X_1..X_m, V, A_1..A_d]/a` with
/// `a = (X_1..X_{m-1})^2 + (X_m^2) + (X_i V) + (V^2 - sum A_i X_i)`, graded,
/// `Q = (a_1..a_d)`, `p = (x_1..x_m, v)`, `M = Q + p`. Needs `1 <= d < m`.
pub fn counterexample_ring(m: usize, d: usize, characteristic: u32) -> Result<FamilyInstance> {
    if d == 0 || d >= m {
        return Err(Error::Precondition(format!("need 1 <= d < m, got m = {m}, d = {d}")));
    }
    let field = Field::with_characteristic(characteristic)?;
    let x = |i: usize| format!("x{i}");
    let a = |i: usize| format!("a{i}");
    let mut names: Vec<String> = (1..=m).map(x).collect();
    names.push("v".into());
    names.extend((1..=d).map(a));

    let mut rels = Vec::new();
    for i in 1..m {
        for j in i..m {
            rels.push(format!("x{i}*x{j}"));
        }
    }
    rels.push(format!("x{m}^2"));
    rels.extend((1..=m).map(|i| format!("x{i}*v")));
    let sum: Vec<String> = (1..=d).map(|i| format!("a{i}*x{i}")).collect();
    rels.push(format!("v^2 - {}", sum.join(" - ")));
    let ring = RingPresentation::parse(&format!("{field}[{}] / ({})", names.join(","), rels.join(", ")))?;

    let gens = |list: Vec<String>| ring.parse_ideal(&format!("({})", list.join(", ")));
    let q = gens((1..=d).map(a).collect())?;
    let mut p_gens: Vec<String> = (1..=m).map(x).collect();
    p_gens.push("v".into());
    let p = gens(p_gens)?;
    let max = ring.max_ideal()?;
    let squares = gens((1..=d).map(|i| format!("a{i}^2")).collect())?;
    let mut colon_gens: Vec<String> = (1..=d).map(a).collect();
    colon_gens.extend((1..m).map(|i| format!("x{i}*x{m}")));
    colon_gens.push("v".into());
    let colon_expected = gens(colon_gens)?;
    let v2 = ring.parse_poly("v^2")?;

    let (mu, du) = (m as u64, d as u64);
    let mut claims = vec![
        dimension_claim("dimension", &ring, d, Published, "dim R = d: the defining ideal has radical (X_1..X_m, V)"),
        length_claim("length", &q, 2 * mu + 1, Published, "R/Q has k-dimension 2m + 1"),
        multiplicity_claim("multiplicity", &q, 2 * mu, Published, "e(R) = 2m, and Q is a minimal reduction of M"),
        defect_claim("defect", &q, 1, Published, "length(R/Q) - e_Q(R) = 1, so R is not Cohen-Macaulay"),
    ];
    {
        let (q, max, colon_expected) = (q.clone(), max.clone(), colon_expected.clone());
        claims.push(equality_claim(
            "colon_by_max",
            true,
            Published,
            "Q : M = Q + (x_i x_m | i < m) + (v)",
            move || Ok((q.colon(&max)?, colon_expected.clone())),
        ));
    }
    {
        let (q, max) = (q.clone(), max.clone());
        claims.push(equality_claim(
            "reduction",
            true,
            Published,
            "M^3 = QM^2 because p^3 = 0, so Q is a minimal reduction of M",
            move || Ok((max.power(3)?, q.product(&max.power(2)?)?)),
        ));
    }
    {
        let (q, p, max) = (q.clone(), p.clone(), max.clone());
        claims.push(equality_claim(
            "max_cubed_literal",
            false,
            Derived,
            "M^3 = Q p^2 read literally fails: Q^2 p lies in M^3 but not in Q p^2",
            move || Ok((max.power(3)?, q.product(&p.power(2)?)?)),
        ));
    }
    {
        let p = p.clone();
        let zero = ring.zero_ideal();
        claims.push(equality_claim("p_cubed_zero", true, Published, "p^3 = (0)", move || Ok((p.power(3)?, zero.clone()))));
    }
    claims.push(stability_of_colon_claim(
        "stability",
        &q,
        stability_expectation(2),
        Published,
        "for I = Q : M, I^2 != QI but I^3 = QI^2",
    ));
    {
        let (q, max, v2) = (q.clone(), max.clone(), v2.clone());
        claims.push(super::Claim::new(
            "v_squared_in_QJ",
            false,
            Published,
            "v^2 does not lie in QJ for J = Q : M",
            move |_| {
                let j = q.colon(&max)?;
                Ok(super::Computed::new(q.product(&j)?.contains(&v2)?))
            },
        ));
    }
    {
        let (q, max) = (q.clone(), max.clone());
        let r = ring.clone();
        claims.push(equality_claim("J_squared", true, Published, "J^2 = QJ + (v^2) for J = Q : M", move || {
            let j = q.colon(&max)?;
            let rhs = q.product(&j)?.sum(&r.ideal(vec![v2.clone()])?)?;
            Ok((j.power(2)?, rhs))
        }));
    }
    claims.extend([
        defect_claim("squares.defect", &squares, 1, Published, "length(R/(a^2)) - e_(a^2)(R) = 1 for a^2 = (a_1^2..a_d^2)"),
        multiplicity_claim(
            "squares.multiplicity",
            &squares,
            (1u64 << d) * 2 * mu,
            Derived,
            "e of (a_1^2..a_d^2) is 2^d e(Q), squaring each parameter multiplying e by 2",
        ),
        depth_claim("depth", &q, du - 1, Published, "depth R = d - 1"),
        generator_count_claim("generator_count", &q, d),
    ]);

    Ok(FamilyInstance {
        kind: FamilyKind::Counterexample,
        params: params(&[
            ("m", Value::from(mu)),
            ("d", Value::from(du)),
            ("char", Value::from(characteristic)),
        ]),
        ring,
        dimension: d,
        ideals: vec![
            ("Q".into(), q),
            ("M".into(), max),
            ("p".into(), p),
            ("Q2".into(), squares),
            ("J_expected".into(), colon_expected),
        ],
        claims,
        samples: Some(SamplePlan {
            multiplicity: SampleExpectation::new(
                2 * mu,
                Derived,
                "d general linear forms form a minimal reduction of M, so e_Q(R) = e(R) = 2m",
            ),
            defect: SampleExpectation::new(1, Published, "R is Buchsbaum with length minus multiplicity equal to 1"),
            stability: None,
            perturb: false,
        }),
    })
}
