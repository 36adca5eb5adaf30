use serde_json::Value;

use super::verify::*;
use super::{params, Claim, Computed, FamilyInstance, FamilyKind, SampleExpectation, SamplePlan};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::ideal::subalgebra_presentation;
use crate::monomial::Monomial;
use crate::presentation::RingPresentation;
use crate::report::Provenance::{Derived, Published};

/// An irreducible monic quadratic in `u`: `u^2 + 1` over `Q`, `u^2 + u + 1`
/// over `F_2`, and `u^2 - r` for the least non-residue `r` over `F_p`.
pub fn default_minpoly(field: Field) -> String {
    match field {
        Field::Rational => "u^2 + 1".into(),
        Field::Prime(2) => "u^2 + u + 1".into(),
        Field::Prime(p) => {
            let r = (2..p).find(|&r| !field.is_square(&Scalar::Prime(r))).expect("odd primes have non-residues");
            format!("u^2 - {r}")
        }
    }
}

/// `(b, c)` of a monic irreducible `u^2 + b u + c`.
fn quadratic(field: Field, minpoly: &str) -> Result<(Scalar, Scalar)> {
    let ring = RingPresentation::parse(&format!("{field}[u]"))?;
    let f = ring.parse_poly(minpoly)?;
    let degree = f.total_degree().unwrap_or(0);
    if degree != 2 {
        return Err(Error::Precondition(format!(
            "only quadratic extensions modeled; `{minpoly}` has degree {degree}"
        )));
    }
    let f = f.monic();
    let coeff = |e: u32| f.coeff_of(&Monomial::new(smallvec::smallvec![e]));
    let (b, c) = (coeff(1), coeff(0));
    let reducible = match field {
        Field::Prime(2) => field.is_zero(&c) || field.is_zero(&field.add(&field.add(&field.one(), &b), &c)),
        _ => {
            let disc = field.sub(&field.mul(&b, &b), &field.mul(&field.from_i64(4), &c));
            field.is_square(&disc)
        }
    };
    if reducible {
        return Err(Error::Precondition(format!("`{minpoly}` is reducible over {field}")));
    }
    Ok((b, c))
}

/// The subring `A = k[x_j, u x_j]` of `K[x_1..x_d]`, `K = k[u]/(minpoly)`,
/// presented on `y_j -> x_j`, `z_j -> u x_j`, with `Q = (y_1..y_d)`.
pub fn field_extension_ring(d: usize, minpoly: Option<&str>, characteristic: u32) -> Result<FamilyInstance> {
    if d < 2 {
        return Err(Error::Precondition(format!("need d >= 2, got {d}")));
    }
    let field = Field::with_characteristic(characteristic)?;
    let minpoly = minpoly.map_or_else(|| default_minpoly(field), str::to_string);
    let (b, c) = quadratic(field, &minpoly)?;

    let xs: Vec<String> = (1..=d).map(|j| format!("x{j}")).collect();
    let target = RingPresentation::parse(&format!("{field}[u,{}] / ({minpoly})", xs.join(",")))?;
    let mut images = Vec::new();
    for x in &xs {
        images.push(target.parse_poly(x)?);
    }
    for x in &xs {
        images.push(target.parse_poly(&format!("u*{x}"))?);
    }
    let ys: Vec<String> = (1..=d).map(|j| format!("y{j}")).collect();
    let zs: Vec<String> = (1..=d).map(|j| format!("z{j}")).collect();
    let pres_vars: Vec<&str> = ys.iter().chain(&zs).map(String::as_str).collect();
    let kernel = subalgebra_presentation(&target, &images, &pres_vars)?;
    let ring = RingPresentation::new(kernel.poly_ring().clone(), kernel.gens().to_vec())?;

    // z_i z_j + b y_i z_j + c y_i y_j and y_i z_j - y_j z_i vanish on the images.
    let free = kernel.presentation().clone();
    let mut expected_rels = Vec::new();
    for i in 1..=d {
        for j in i..=d {
            expected_rels.push(free.parse_poly(&format!("z{i}*z{j} + ({b})*y{i}*z{j} + ({c})*y{i}*y{j}"))?);
            if i < j {
                expected_rels.push(free.parse_poly(&format!("y{i}*z{j} - y{j}*z{i}"))?);
            }
        }
    }

    let q = ring.parse_ideal(&format!("({})", ys.join(", ")))?;
    let max = ring.max_ideal()?;
    let du = d as u64;
    let e_cite = "e(A) equals the degree of the extension, 2";
    let stab_cite = "I^2 = QI for every parameter ideal Q when A sits in a Gorenstein B with length(B/A) = 1";

    let mut claims = Vec::new();
    {
        let kernel = kernel.clone();
        claims.push(Claim::new(
            "kernel.relations",
            true,
            Derived,
            "substituting y_j = x_j, z_j = u x_j annihilates the quadratic relations",
            move |_| {
                let missing: Vec<String> = expected_rels
                    .iter()
                    .filter_map(|f| match kernel.contains(f) {
                        Ok(true) => None,
                        Ok(false) => Some(Ok(f.to_string())),
                        Err(e) => Some(Err(e)),
                    })
                    .collect::<Result<_>>()?;
                let out = Computed::new(missing.is_empty());
                Ok(if missing.is_empty() { out } else { out.with_note(format!("missing: {}", missing.join(", "))) })
            },
        ));
    }
    claims.extend([
        dimension_claim("dimension", &ring, d, Derived, "A is module-finite under K[x], which has dimension d"),
        length_claim("length", &q, du + 1, Derived, "A/Q has basis 1, u x_1, ..., u x_d"),
        multiplicity_claim("multiplicity", &q, 2, Published, e_cite),
        defect_claim("defect", &q, du - 1, Derived, "length d + 1 minus multiplicity 2"),
    ]);
    {
        let (q, max) = (q.clone(), max.clone());
        claims.push(equality_claim("max_squared", true, Published, "m^2 = Qm", move || {
            Ok((max.power(2)?, q.product(&max)?))
        }));
    }
    claims.extend([
        stability_of_colon_claim("stability", &q, stability_expectation(1), Published, stab_cite),
        generator_count_claim("generator_count", &q, d),
        depth_bound_claim("depth_lower_bound", &ring, 1, Derived, "the first local cohomology is K/k, nonzero, so depth is 1"),
    ]);
    if d == 2 {
        claims.push(depth_claim("depth", &q, 1, Derived, "the first local cohomology is K/k, nonzero, so depth is 1"));
    }
    claims.push(flagged_defect_claim(
        "buchsbaum_invariant",
        &q,
        vec![("stated".into(), Value::from(du)), ("cohomology_sum".into(), Value::from(du - 1))],
        "the invariant is stated to be d times length(B/A) = d, while summing binomial(d-1, i) h^i with h^1 = 1 gives d - 1",
    ));

    Ok(FamilyInstance {
        kind: FamilyKind::FieldExtension,
        params: params(&[
            ("d", Value::from(du)),
            ("delta", Value::from(2)),
            ("minpoly", Value::from(minpoly)),
            ("char", Value::from(characteristic)),
        ]),
        ring,
        dimension: d,
        ideals: vec![("Q".into(), q), ("m".into(), max), ("kernel".into(), kernel)],
        claims,
        samples: Some(SamplePlan {
            multiplicity: SampleExpectation::new(2, Published, e_cite),
            defect: SampleExpectation::new(du - 1, Derived, "equal to the defect d - 1 of (y_1..y_d)"),
            stability: Some(SampleExpectation::new(stability_expectation(1), Published, stab_cite)),
            perturb: false,
        }),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_minpolys_are_irreducible() {
        assert_eq!(default_minpoly(Field::Prime(101)), "u^2 - 2");
        assert_eq!(default_minpoly(Field::Prime(7)), "u^2 - 3");
        for f in [Field::Rational, Field::Prime(2), Field::Prime(3), Field::Prime(101)] {
            assert!(quadratic(f, &default_minpoly(f)).is_ok(), "{f}");
        }
    }

    #[test]
    fn rejects_bad_minpolys() {
        // u^2 + 1 splits mod 101 since 10^2 = -1.
        assert!(quadratic(Field::Prime(101), "u^2 + 1").is_err());
        assert!(quadratic(Field::Rational, "u^2 - 4").is_err());
        assert!(quadratic(Field::Rational, "u^3 + 2").unwrap_err().to_string().contains("only quadratic"));
        assert!(quadratic(Field::Prime(2), "u^2 + 1").is_err());
        assert!(field_extension_ring(1, None, 101).is_err());
    }

    #[test]
    fn rational_kernel_contains_sum_of_squares_relations() {
        let inst = field_extension_ring(2, Some("u^2 + 1"), 0).unwrap();
        let kernel = inst.ideal("kernel").unwrap();
        for rel in ["y1^2 + z1^2", "y2^2 + z2^2", "y1*y2 + z1*z2", "y1*z2 - y2*z1"] {
            let f = kernel.presentation().parse_poly(rel).unwrap();
            assert!(kernel.contains(&f).unwrap(), "{rel}");
        }
    }
}
