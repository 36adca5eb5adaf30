//! Worked examples for each module, with values cross-checked against the
//! linear-algebra oracles in the testkit.

mod common;

use common::*;
use socle_lab::division::{divide, normal_form};
use socle_lab::families::{counterexample_ring, fiber_product_ring};
use socle_lab::groebner::buchberger_traced;
use socle_lab::invariants::{self, classify_depth, depth_probe};
use socle_lab::{buchberger, subalgebra_presentation, Error, Polynomial};
use socle_lab_testkit::{macaulay_contains, staircase_count};

fn display_all(ps: &[Polynomial]) -> Vec<String> {
    ps.iter().map(Polynomial::display).collect()
}

// ---- algebra-core ----

#[test]
fn arithmetic_identities() {
    let r = ring("Q[x,y]");
    let x = poly(&r, "x");
    assert!((&x - &x).is_zero());
    let y = poly(&r, "y");
    let prod = (&x + &y).checked_mul(&(&x - &y)).unwrap();
    assert_eq!(prod, poly(&r, "x^2 - y^2"));
}

#[test]
fn relation_rebuilt_term_for_term() {
    let r = ring("Q[x1,x2,v,a1,a2]");
    let v = poly(&r, "v");
    let mut f = v.checked_mul(&v).unwrap();
    for i in 1..=2 {
        f = &f - &poly(&r, &format!("a{i}*x{i}"));
    }
    assert_eq!(f.display(), poly(&r, "v^2 - a1*x1 - a2*x2").display());
    assert_eq!(f.len(), 3);
}

#[test]
fn leading_terms() {
    let grevlex = ring("Q[x,y]");
    assert_eq!(poly(&grevlex, "x^2 + x*y").lm().display(grevlex.names()).to_string(), "x^2");
    assert_eq!(poly(&grevlex, "x + y^3").lm().display(grevlex.names()).to_string(), "y^3");
    let lex = ring("Q[x,y] lex");
    assert_eq!(poly(&lex, "x + y^3").lm().display(lex.names()).to_string(), "x");
    let zero = Polynomial::zero(grevlex.poly_ring());
    assert!(matches!(zero.leading_term(), Err(Error::ZeroPolynomial)));
}

#[test]
fn normal_forms() {
    let r = ring("Q[x,y]");
    let f = poly(&r, "x^2*y + x + y");
    assert_eq!(normal_form(&f, &[poly(&r, "x")]).unwrap(), poly(&r, "y"));
    assert_eq!(normal_form(&f, &[]).unwrap(), f);

    let d = divide(&f, &[poly(&r, "x*y - 1"), poly(&r, "y^2")]).unwrap();
    let mut rebuilt = d.remainder.clone();
    for (q, g) in d.quotients.iter().zip([poly(&r, "x*y - 1"), poly(&r, "y^2")]) {
        rebuilt = &rebuilt + &q.checked_mul(&g).unwrap();
    }
    assert_eq!(rebuilt, f);
}

#[test]
fn relation_forces_v_squared() {
    let inst = counterexample_ring(2, 1, 101).unwrap();
    let r = &inst.ring;
    let gb = r.defining_basis().unwrap();
    let nf = gb.normal_form(&poly(r, "v^2")).unwrap();
    assert_eq!(nf, poly(r, "a1*x1"));
    // v^2 - a1*x1 is in the defining ideal; v^2 alone is not.
    let rels: Vec<_> = r.relations().iter().map(sparse).collect();
    assert!(macaulay_contains(&rels, &sparse(&poly(r, "v^2 - a1*x1")), r.nvars(), P));
    assert!(!macaulay_contains(&rels, &sparse(&poly(r, "v^2")), r.nvars(), P));
}

// ---- groebner ----

#[test]
fn small_bases() {
    let r = ring("F101[x,y]");
    let gb = buchberger(r.poly_ring(), &[poly(&r, "x")]).unwrap();
    assert_eq!(display_all(gb.elements()), ["x"]);

    let gens = [poly(&r, "x^2"), poly(&r, "x*y + y^2")];
    let gb = buchberger(r.poly_ring(), &gens).unwrap();
    assert_eq!(display_all(gb.elements()), ["x*y + y^2", "x^2", "y^3"]);
    let sg: Vec<_> = gens.iter().map(sparse).collect();
    assert!(macaulay_contains(&sg, &sparse(&poly(&r, "y^3")), 2, P));
    assert!(!macaulay_contains(&sg, &sparse(&poly(&r, "y^2")), 2, P));
    assert!(!macaulay_contains(&sg, &sparse(&poly(&r, "x*y")), 2, P));

    let (traced, cof) = buchberger_traced(r.poly_ring(), &gens).unwrap();
    assert_eq!(traced.elements(), gb.elements());
    for (g, row) in traced.elements().iter().zip(&cof) {
        let mut sum = Polynomial::zero(r.poly_ring());
        for (c, h) in row.iter().zip(&gens) {
            sum = &sum + &c.checked_mul(h).unwrap();
        }
        assert_eq!(&sum, g);
    }
}

#[test]
fn monomial_generators_are_a_basis() {
    let inst = fiber_product_ring(2, 101).unwrap();
    let gb = inst.ring.defining_basis().unwrap();
    let mut got = display_all(gb.elements());
    got.sort();
    assert_eq!(got, ["x1*y1", "x1*y2", "x2*y1", "x2*y2"]);
}

#[test]
fn membership_in_the_counterexample() {
    let inst = counterexample_ring(2, 1, 101).unwrap();
    let r = &inst.ring;
    let (q, max) = (inst.q(), inst.ideal("M").unwrap());
    let j = q.colon(max).unwrap();
    let qj = q.product(&j).unwrap();
    let qj2 = q.product(&j.power(2).unwrap()).unwrap();
    let v2 = poly(r, "v^2");
    let v3 = poly(r, "v^3");
    assert!(!qj.contains(&v2).unwrap());
    assert!(qj2.contains(&v3).unwrap());
    // Homogeneous data, so the Macaulay test at the element's degree is exact.
    assert!(!oracle_contains(&qj, &v2, 2));
    assert!(oracle_contains(&qj2, &v3, 3));
    let line = ring("Q[x]");
    assert!(ideal(&line, "(x)").contains(&poly(&line, "x^2")).unwrap());
}

#[test]
fn ideal_equalities() {
    let r = ring("Q[x,y]");
    assert!(ideal(&r, "(x, y)").equals(&ideal(&r, "(x + y, y)")).unwrap());

    let inst = counterexample_ring(2, 1, 101).unwrap();
    let q = inst.q();
    let j = q.colon(inst.ideal("M").unwrap()).unwrap();
    let j2 = j.power(2).unwrap();
    let qj = q.product(&j).unwrap();
    assert!(!j2.equals(&qj).unwrap());
    assert!(qj.is_subset(&j2).unwrap());
    let witness = j2.containment_witness(&qj).unwrap().expect("J^2 is strictly larger");
    assert!(!oracle_contains(&qj, &witness, witness.total_degree().unwrap()));
    assert!(j.power(3).unwrap().equals(&q.product(&j2).unwrap()).unwrap());
}

// ---- ideal-calculus ----

#[test]
fn sums_and_products() {
    let r = ring("Q[x,y]");
    assert!(ideal(&r, "(x)").sum(&ideal(&r, "(y)")).unwrap().equals(&ideal(&r, "(x, y)")).unwrap());
    let m = ideal(&r, "(x, y)");
    assert!(m.product(&m).unwrap().equals(&ideal(&r, "(x^2, x*y, y^2)")).unwrap());
    assert!(m.power(0).is_err());
}

/// Monomials of degree at most 3 lying in both ideals, per the Macaulay oracle.
fn common_monomials(a: &socle_lab::Ideal, b: &socle_lab::Ideal) -> Vec<Polynomial> {
    let r = a.presentation();
    socle_lab_testkit::monomials_below(r.nvars(), 4)
        .into_iter()
        .map(|e| {
            let src: Vec<String> = e.iter().zip(r.names()).map(|(k, n)| format!("{n}^{k}")).collect();
            poly(r, &src.join("*"))
        })
        .filter(|m| oracle_contains(a, m, 3) && oracle_contains(b, m, 3))
        .collect()
}

#[test]
fn intersections() {
    let r = ring("F101[x,y]");
    let (x, y) = (ideal(&r, "(x)"), ideal(&r, "(y)"));
    assert!(x.intersect(&y).unwrap().equals(&ideal(&r, "(x*y)")).unwrap());

    let a = ideal(&r, "(x^2, y)");
    let meet = a.intersect(&x).unwrap();
    assert!(meet.equals(&ideal(&r, "(x^2, x*y)")).unwrap());
    for m in common_monomials(&a, &x) {
        assert!(meet.contains(&m).unwrap(), "{} missing", m.display());
    }
    for g in meet.gens() {
        assert!(oracle_contains(&a, g, 3) && oracle_contains(&x, g, 3));
    }

    let inst = fiber_product_ring(2, 101).unwrap();
    let (p1, p2) = (inst.ideal("p1").unwrap(), inst.ideal("p2").unwrap());
    assert!(p1.intersect(p2).unwrap().is_zero());
}

#[test]
fn colons() {
    let r = ring("F101[x,y]");
    assert!(ideal(&r, "(x^2)").colon(&ideal(&r, "(x)")).unwrap().equals(&ideal(&r, "(x)")).unwrap());
    assert!(matches!(ideal(&r, "(x)").colon(&r.zero_ideal()), Err(Error::ColonByZero)));

    let f = ring("F101[x,y] / (x*y)");
    let q = ideal(&f, "(x + y)");
    let c = q.colon(&f.max_ideal().unwrap()).unwrap();
    assert!(c.equals(&f.max_ideal().unwrap()).unwrap());
    for g in ["x^2", "x*y", "y^2"] {
        assert!(oracle_contains(&q, &poly(&f, g), 2));
    }
    assert!(!oracle_contains(&q, &poly(&f, "x"), 1));

    let inst = counterexample_ring(2, 1, 101).unwrap();
    let colon = inst.q().colon(inst.ideal("M").unwrap()).unwrap();
    assert!(colon.equals(&ideal(&inst.ring, "(a1, x1*x2, v)")).unwrap());
}

#[test]
fn eliminations() {
    let r = ring("Q[t,x]");
    assert!(ideal(&r, "(t*x - 1)").eliminate(&["t"]).unwrap().is_zero());

    let r = ring("Q[t,x,y]");
    let e = ideal(&r, "(t*x, (1 - t)*y)").eliminate(&["t"]).unwrap();
    let target = e.presentation().clone();
    assert_eq!(target.names(), ["x", "y"]);
    assert!(e.equals(&ideal(&target, "(x*y)")).unwrap());

    let r = ring("Q[t,p,q]");
    let e = ideal(&r, "(p - t^2, q - t^3)").eliminate(&["t"]).unwrap();
    let target = e.presentation().clone();
    assert!(e.equals(&ideal(&target, "(p^3 - q^2)")).unwrap());
    let t = ring("Q[t]");
    for g in e.gens() {
        let back = g.substitute(&[poly(&t, "t^2"), poly(&t, "t^3")]).unwrap();
        assert!(back.is_zero());
    }
}

#[test]
fn dimensions() {
    let r = ring("Q[x,y]");
    assert_eq!(r.zero_ideal().krull_dimension().unwrap(), 2);
    assert!(ideal(&r, "(1)").krull_dimension().is_err());
    assert_eq!(counterexample_ring(2, 1, 101).unwrap().ring.dimension().unwrap(), 1);
    assert_eq!(fiber_product_ring(2, 101).unwrap().ring.dimension().unwrap(), 2);
}

#[test]
fn origin_primary() {
    let r = ring("Q[x,y]");
    assert!(ideal(&r, "(x^2, y^3)").is_origin_primary().unwrap());
    assert!(!ideal(&r, "(x)").is_origin_primary().unwrap());
    assert!(ideal(&r, "(x*y, x + y)").is_origin_primary().unwrap());
    // (x^2 - x, y) has a component at (1, 0).
    assert!(!ideal(&r, "(x^2 - x, y)").is_origin_primary().unwrap());
    match invariants::length(&ideal(&r, "(x)")) {
        Err(Error::NotOriginPrimary { variable, .. }) => assert_eq!(variable, "y"),
        other => panic!("expected a named variable, got {other:?}"),
    }
}

#[test]
fn presentations() {
    let line = ring("Q[x]");
    let k = subalgebra_presentation(&line, &[poly(&line, "x")], &["p"]).unwrap();
    assert!(k.is_zero());

    let t = ring("Q[t]");
    let k = subalgebra_presentation(&t, &[poly(&t, "t^2"), poly(&t, "t^3")], &["p", "q"]).unwrap();
    let pres = k.presentation().clone();
    assert!(k.equals(&ideal(&pres, "(p^3 - q^2)")).unwrap());
}

// ---- local-invariants ----

#[test]
fn lengths() {
    let line = ring("F101[x]");
    assert_eq!(invariants::length(&ideal(&line, "(x^3)")).unwrap(), 3);
    let r = ring("F101[x,y]");
    let j = ideal(&r, "(x^2, x*y + y^2)");
    assert_eq!(invariants::length(&j).unwrap(), 4);
    assert_eq!(oracle_length(&j), 4);
    let inst = counterexample_ring(2, 1, 101).unwrap();
    assert_eq!(invariants::length(inst.q()).unwrap(), 5);
    assert_eq!(oracle_length(inst.q()), 5);
    assert_eq!(staircase_count(&[vec![2, 0], vec![1, 1], vec![0, 3]], 2), 4);
}

#[test]
fn relative_lengths() {
    let line = ring("F101[x]");
    assert_eq!(invariants::relative_length(&ideal(&line, "(x^2)"), &ideal(&line, "(x)")).unwrap(), 1);
    assert!(invariants::relative_length(&ideal(&line, "(x)"), &ideal(&line, "(x^2)")).is_err());

    let inst = counterexample_ring(2, 1, 101).unwrap();
    let j = inst.q().colon(inst.ideal("M").unwrap()).unwrap();
    assert_eq!(oracle_length(&j), 3);
    assert_eq!(invariants::relative_length(inst.q(), &j).unwrap(), 2);

    let f = ring("F101[x,y] / (x*y)");
    assert_eq!(invariants::relative_length(&ideal(&f, "(x + y)"), &f.max_ideal().unwrap()).unwrap(), 1);
}

#[test]
fn socles() {
    let r = ring("F101[x,y]");
    let j = ideal(&r, "(x^2, y^2)");
    let s = invariants::socle(&j).unwrap();
    assert_eq!(s.length, 1);
    assert_eq!(oracle_socle(&j), 1);
    assert!(s.ideal.equals(&ideal(&r, "(x^2, y^2, x*y)")).unwrap());

    let m = r.max_ideal().unwrap();
    for (q, expected) in [("(x, y^3)", 2), ("(x^2, y^2)", 3), ("(x, y)", 2)] {
        let qm = ideal(&r, q).product(&m).unwrap();
        assert_eq!(invariants::socle(&qm).unwrap().length, expected, "{q}");
        assert_eq!(oracle_socle(&qm), expected, "{q}");
    }
}

#[test]
fn generator_counts() {
    let r = ring("F101[x,y]");
    assert_eq!(invariants::min_generators(&r.max_ideal().unwrap()).unwrap(), 2);
    let f = ring("F101[x,y] / (x*y)");
    assert_eq!(invariants::min_generators(&f.max_ideal().unwrap()).unwrap(), 2);
    let inst = counterexample_ring(2, 1, 101).unwrap();
    let j = inst.q().colon(inst.ideal("M").unwrap()).unwrap();
    let mu = invariants::min_generators(&j).unwrap();
    assert_eq!(mu, 3);
    assert_eq!(mu, invariants::relative_length(inst.q(), &j).unwrap() + 1);
}

#[test]
fn hilbert_samuel_sequences() {
    let line = ring("F101[x]");
    assert_eq!(invariants::hilbert_samuel(&ideal(&line, "(x)"), 4).unwrap().colengths, [1, 2, 3, 4]);
    let r = ring("F101[x,y]");
    let q = ideal(&r, "(x^2, y^3)");
    let hs = invariants::hilbert_samuel(&q, 4).unwrap();
    assert_eq!(hs.colengths, [6, 18, 36, 60]);
    assert_eq!(staircase_count(&[vec![2, 0], vec![0, 3]], 2), 6);
    let inst = counterexample_ring(2, 1, 101).unwrap();
    let hs = invariants::hilbert_samuel(inst.q(), 4).unwrap();
    assert_eq!(hs.colengths, [5, 9, 13, 17]);
    let q2 = inst.q().power(2).unwrap();
    assert_eq!(oracle_length(&q2), 9);
}

#[test]
fn multiplicities_and_defects() {
    let line = ring("F101[x]");
    assert_eq!(invariants::multiplicity(&ideal(&line, "(x)")).unwrap(), 1);
    let r = ring("Q[x,y]");
    assert_eq!(invariants::multiplicity(&ideal(&r, "(x^2, y^3)")).unwrap(), 6);
    assert_eq!(invariants::buchsbaum_defect(&ideal(&r, "(x, y)")).unwrap(), 0);

    let inst = counterexample_ring(2, 1, 101).unwrap();
    assert_eq!(invariants::multiplicity(inst.q()).unwrap(), 4);
    assert_eq!(invariants::buchsbaum_defect(inst.ideal("Q2").unwrap()).unwrap(), 1);

    let fiber = fiber_product_ring(2, 101).unwrap();
    assert_eq!(invariants::length(fiber.q()).unwrap(), 3);
    assert_eq!(oracle_length(fiber.q()), 3);
    assert_eq!(invariants::multiplicity(fiber.q()).unwrap(), 2);
    assert_eq!(invariants::buchsbaum_defect(fiber.q()).unwrap(), 1);
}

#[test]
fn depth() {
    let r = ring("F101[x,y]");
    let probe = depth_probe(&r, 3, 7).unwrap();
    assert_eq!(probe.bound, 2);
    assert_eq!(classify_depth(&probe, 0), Some(2));

    let inst = counterexample_ring(3, 2, 101).unwrap();
    let probe = depth_probe(&inst.ring, 3, 7).unwrap();
    assert_eq!(probe.bound, 1);
    let defect = invariants::buchsbaum_defect(inst.q()).unwrap();
    assert!(defect > 0);
    assert_eq!(classify_depth(&probe, defect), Some(1));

    let fiber = fiber_product_ring(2, 101).unwrap();
    let probe = depth_probe(&fiber.ring, 3, 7).unwrap();
    assert_eq!(probe.bound, 1);
    // x2 + y2 is a zerodivisor modulo x1 + y1.
    let first = ideal(&fiber.ring, "(x1 + y1)");
    let f = poly(&fiber.ring, "x2 + y2");
    assert!(!first.colon_poly(&f).unwrap().equals(&first).unwrap());
}

#[test]
fn cm_types() {
    let r = ring("F101[x,y]");
    assert_eq!(invariants::cm_type(&ideal(&r, "(x, y)")).unwrap(), 1);
    let f = ring("F101[x,y] / (x*y)");
    assert_eq!(invariants::cm_type(&ideal(&f, "(x + y)")).unwrap(), 1);
    let curve = ring("F101[x,y,z] / (y^2 - x*z, z^2 - x^2*y, x^3 - y*z)");
    assert_eq!(invariants::cm_type(&ideal(&curve, "(x)")).unwrap(), 2);
    let inst = counterexample_ring(2, 1, 101).unwrap();
    assert!(invariants::cm_type(inst.q()).is_err());
}

#[test]
fn stability_indices() {
    let f = ring("F101[x,y] / (x*y)");
    let q = ideal(&f, "(x + y)");
    let i = q.colon(&f.max_ideal().unwrap()).unwrap();
    assert_eq!(invariants::stability_index(&i, &q, 4).unwrap().index, Some(1));

    let inst = counterexample_ring(2, 1, 101).unwrap();
    let j = inst.q().colon(inst.ideal("M").unwrap()).unwrap();
    let s = invariants::stability_index(&j, inst.q(), 4).unwrap();
    assert_eq!(s.index, Some(2));
    assert_eq!(s.checks, [false, true]);

    let line = ring("F101[x]");
    for kmax in [1, 3, 6] {
        let s = invariants::stability_index(&ideal(&line, "(x)"), &ideal(&line, "(x^2)"), kmax).unwrap();
        assert_eq!(s.index, None);
        assert_eq!(s.checks.len(), kmax as usize);
    }
}
