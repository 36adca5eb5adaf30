//! Randomized properties of the polynomial, Gröbner and ideal layers.

mod common;

use common::*;
use proptest::prelude::*;
use proptest::sample::subsequence;
use socle_lab::division::{divide, normal_form};
use socle_lab::groebner::{buchberger_with_strategy, PairStrategy};
use socle_lab::{buchberger, invariants, Polynomial};
use socle_lab_testkit::gen::{self, render, render_ideal, render_monomial_ideal, ring_text, Terms, NAMES};
use socle_lab_testkit::{macaulay_contains, staircase_count};

fn polys(r: &std::sync::Arc<socle_lab::RingPresentation>, gens: &[Terms], n: usize) -> Vec<Polynomial> {
    gens.iter().map(|g| poly(r, &render(g, &NAMES[..n]))).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn basis_ignores_generator_order(
        gens in prop::collection::vec(gen::poly(3, 3, 3), 1..4),
        seed in any::<u64>(),
    ) {
        let r = ring(&ring_text("F101", 3));
        let ps = polys(&r, &gens, 3);
        let base = buchberger(r.poly_ring(), &ps).unwrap();
        let mut shuffled = ps.clone();
        let mut state = seed | 1;
        for i in (1..shuffled.len()).rev() {
            state ^= state << 13; state ^= state >> 7; state ^= state << 17;
            shuffled.swap(i, (state % (i as u64 + 1)) as usize);
        }
        let again = buchberger(r.poly_ring(), &shuffled).unwrap();
        prop_assert_eq!(again.elements(), base.elements());
        let fifo = buchberger_with_strategy(r.poly_ring(), &ps, PairStrategy::Fifo).unwrap();
        prop_assert_eq!(fifo.elements(), base.elements());
    }

    #[test]
    fn normal_form_is_idempotent_and_certified(
        f in gen::poly(3, 4, 5),
        gens in prop::collection::vec(gen::poly(3, 3, 3), 0..4),
    ) {
        let r = ring(&ring_text("Q", 3));
        let f = poly(&r, &render(&f, &NAMES));
        let divisors: Vec<Polynomial> = polys(&r, &gens, 3).into_iter().filter(|g| !g.is_zero()).collect();
        let once = normal_form(&f, &divisors).unwrap();
        prop_assert_eq!(normal_form(&once, &divisors).unwrap(), once.clone());
        let d = divide(&f, &divisors).unwrap();
        prop_assert_eq!(&d.remainder, &once);
        let mut rebuilt = d.remainder.clone();
        for (q, g) in d.quotients.iter().zip(&divisors) {
            rebuilt = &rebuilt + &q.checked_mul(g).unwrap();
        }
        prop_assert_eq!(rebuilt, f);
    }

    #[test]
    fn rational_and_modular_arithmetic_agree(a in gen::poly(3, 3, 4), b in gen::poly(3, 3, 4)) {
        let q = ring(&ring_text("Q", 3));
        let fp = ring(&ring_text("F101", 3));
        let (sa, sb) = (render(&a, &NAMES), render(&b, &NAMES));
        let over_q = poly(&q, &sa).checked_mul(&(&poly(&q, &sb) - &poly(&q, "x"))).unwrap();
        let over_p = poly(&fp, &sa).checked_mul(&(&poly(&fp, &sb) - &poly(&fp, "x"))).unwrap();
        prop_assert_eq!(poly(&fp, &over_q.display()), over_p);
    }

    #[test]
    fn colon_contains_and_is_extensive(
        i in prop::collection::vec(gen::nonunit_poly(2, 3, 2), 1..3),
        j in prop::collection::vec(gen::nonunit_poly(2, 2, 2), 1..3),
    ) {
        let r = ring(&ring_text("F101", 2));
        let (ii, jj) = (ideal(&r, &render_ideal(&i, &NAMES[..2])), ideal(&r, &render_ideal(&j, &NAMES[..2])));
        prop_assume!(!jj.is_zero());
        let c = ii.colon(&jj).unwrap();
        prop_assert!(c.product(&jj).unwrap().is_subset(&ii).unwrap());
        prop_assert!(ii.is_subset(&c).unwrap());
    }

    #[test]
    fn intersection_is_symmetric_and_contained(
        i in prop::collection::vec(gen::nonunit_poly(2, 3, 2), 1..3),
        j in prop::collection::vec(gen::nonunit_poly(2, 3, 2), 1..3),
    ) {
        let r = ring(&ring_text("F101", 2));
        let (ii, jj) = (ideal(&r, &render_ideal(&i, &NAMES[..2])), ideal(&r, &render_ideal(&j, &NAMES[..2])));
        let a = ii.intersect(&jj).unwrap();
        let b = jj.intersect(&ii).unwrap();
        let (ga, gb) = (a.basis().unwrap(), b.basis().unwrap());
        prop_assert_eq!(ga.elements(), gb.elements());
        prop_assert!(a.is_subset(&ii).unwrap() && a.is_subset(&jj).unwrap());
        prop_assert!(ii.product(&jj).unwrap().is_subset(&a).unwrap());
    }

    #[test]
    fn elimination_is_sound(g in gen::nonunit_poly(2, 2, 3), h in gen::nonunit_poly(2, 2, 3)) {
        // Graph of (g, h): the kernel of k[p, q] -> k[x, y].
        let r = ring("F101[x,y,p,q]");
        let src = format!("(p - ({}), q - ({}))", render(&g, &NAMES[..2]), render(&h, &NAMES[..2]));
        let graph = ideal(&r, &src);
        let e = graph.eliminate(&["x", "y"]).unwrap();
        let back = ring("F101[x,y]");
        let images = [poly(&back, &render(&g, &NAMES[..2])), poly(&back, &render(&h, &NAMES[..2]))];
        for k in e.gens() {
            prop_assert!(k.substitute(&images).unwrap().is_zero());
        }
    }

    #[test]
    fn dimension_extremes(stair in gen::staircase(3)) {
        let r = ring(&ring_text("F101", 3));
        prop_assert_eq!(ideal(&r, &render_monomial_ideal(&stair, &NAMES)).krull_dimension().unwrap(), 0);
        prop_assert_eq!(r.zero_ideal().krull_dimension().unwrap(), 3);
    }

    #[test]
    fn staircase_lengths_match_lattice_count(n in 1usize..=3, stair in gen::staircase(3)) {
        let stair: Vec<Vec<u32>> = stair.into_iter().map(|e| e[..n].to_vec()).filter(|e| e.iter().any(|&k| k > 0)).collect();
        let r = ring(&ring_text("F101", n));
        let j = ideal(&r, &render_monomial_ideal(&stair, &NAMES[..n]));
        prop_assert_eq!(invariants::length(&j).unwrap(), staircase_count(&stair, n));
    }

    #[test]
    fn complete_intersection_multiplicity_is_colength(powers in gen::pure_powers(2)) {
        let r = ring(&ring_text("F101", 2));
        let q = ideal(&r, &format!("(x^{}, y^{})", powers[0], powers[1]));
        let len = invariants::length(&q).unwrap();
        prop_assert_eq!(len, u64::from(powers[0] * powers[1]));
        prop_assert_eq!(invariants::multiplicity(&q).unwrap(), len);
        prop_assert_eq!(invariants::buchsbaum_defect(&q).unwrap(), 0);
    }

    #[test]
    fn membership_matches_macaulay_rank(
        n in 1usize..=3,
        gens in prop::collection::vec(gen::homogeneous_upto(3, 3, 3), 1..4),
        f in gen::homogeneous_upto(3, 3, 4),
    ) {
        let names = &NAMES[..n];
        let trim = |t: &Terms| -> Terms {
            t.iter().filter(|(_, e)| e[n..].iter().all(|&k| k == 0)).map(|(c, e)| (*c, e[..n].to_vec())).collect()
        };
        let gens: Vec<Terms> = gens.iter().map(trim).filter(|g| !g.is_empty()).collect();
        let f = trim(&f);
        prop_assume!(!gens.is_empty() && !f.is_empty());
        let r = ring(&ring_text("F101", n));
        let ps: Vec<Polynomial> = gens.iter().map(|g| poly(&r, &render(g, names))).collect();
        let fp = poly(&r, &render(&f, names));
        let gb = buchberger(r.poly_ring(), &ps).unwrap();
        let sg: Vec<_> = ps.iter().map(sparse).collect();
        prop_assert_eq!(gb.contains(&fp).unwrap(), macaulay_contains(&sg, &sparse(&fp), n, P));
        // A random element of the ideal is always a member.
        let inside = ps.iter().fold(Polynomial::zero(r.poly_ring()), |acc, g| &acc + &g.checked_mul(&fp).unwrap());
        prop_assert!(gb.contains(&inside).unwrap());
    }

    #[test]
    fn inhomogeneous_membership_is_one_sided(
        gens in prop::collection::vec(gen::poly(2, 3, 3), 1..3),
        f in gen::poly(2, 3, 3),
    ) {
        let r = ring(&ring_text("F101", 2));
        let ps: Vec<Polynomial> = polys(&r, &gens, 2).into_iter().filter(|g| !g.is_zero()).collect();
        prop_assume!(!ps.is_empty());
        let fp = poly(&r, &render(&f, &NAMES[..2]));
        let sg: Vec<_> = ps.iter().map(sparse).collect();
        if socle_lab_testkit::macaulay_contains_up_to(&sg, &sparse(&fp), 2, 8, P) {
            prop_assert!(buchberger(r.poly_ring(), &ps).unwrap().contains(&fp).unwrap());
        }
    }

    #[test]
    fn socle_and_length_match_oracles(
        stair in gen::staircase(2),
        extra in prop::collection::vec(gen::homogeneous(2, 2, 2), 0..2),
    ) {
        let r = ring(&ring_text("F101", 2));
        let mut src: Vec<String> = stair.iter().map(|e| gen::render_monomial(e, &NAMES[..2])).collect();
        src.extend(extra.iter().map(|g| render(g, &NAMES[..2])));
        let j = ideal(&r, &format!("({})", src.join(", ")));
        prop_assert_eq!(invariants::length(&j).unwrap(), oracle_length(&j));
        prop_assert_eq!(invariants::socle(&j).unwrap().length, oracle_socle(&j));
    }

    #[test]
    fn quotient_socles_match_oracle(a in 1u32..=3, b in 1u32..=3, c in gen::homogeneous(2, 2, 2)) {
        // Socles over the hypersurface k[x,y]/(xy) computed through the relation.
        let r = ring("F101[x,y] / (x*y)");
        let j = ideal(&r, &format!("(x^{a} + y^{b}, {})", render(&c, &NAMES[..2])));
        prop_assume!(j.is_origin_primary().unwrap());
        prop_assert_eq!(invariants::length(&j).unwrap(), oracle_length(&j));
        prop_assert_eq!(invariants::socle(&j).unwrap().length, oracle_socle(&j));
    }

    #[test]
    fn monomial_ideal_generators(stair in gen::staircase(2), keep in subsequence(vec![0usize, 1, 2, 3, 4], 0..=5)) {
        // mu of a monomial ideal is the number of minimal monomial generators.
        let r = ring(&ring_text("F101", 2));
        let gens: Vec<Vec<u32>> = keep.into_iter().filter_map(|k| stair.get(k).cloned()).collect();
        prop_assume!(!gens.is_empty());
        let j = ideal(&r, &render_monomial_ideal(&gens, &NAMES[..2]));
        prop_assume!(j.is_origin_primary().unwrap());
        let minimal = gens.iter().enumerate().filter(|(i, g)| {
            !gens.iter().enumerate().any(|(k, h)| {
                k != *i && h.iter().zip(g.iter()).all(|(a, b)| a <= b) && (h != *g || k < *i)
            })
        }).count() as u64;
        prop_assert_eq!(invariants::min_generators(&j).unwrap(), minimal);
    }
}
