//! Buchberger's algorithm with the Gebauer–Möller pair criteria, producing
//! reduced Gröbner bases.

pub mod cache;

use std::sync::Arc;

use crate::division::{normal_form, reduce};
use crate::error::Result;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;
use crate::ring::PolyRing;

/// A reduced Gröbner basis: monic elements, mutually irreducible, sorted by
/// ascending leading monomial. Two ideals are equal iff their bases are.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroebnerBasis {
    ring: Arc<PolyRing>,
    basis: Vec<Polynomial>,
}

/// How the next critical pair is chosen. The result does not depend on it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum PairStrategy {
    /// Smallest lcm degree first, ties broken by the monomial order on the lcm.
    #[default]
    Normal,
    /// Oldest pair first.
    Fifo,
}

impl GroebnerBasis {
    pub(crate) fn from_reduced(ring: &Arc<PolyRing>, basis: Vec<Polynomial>) -> Self {
        GroebnerBasis { ring: ring.clone(), basis }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// The basis `{1}`.
    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_unit()
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.basis.iter().map(|g| g.lm())
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        normal_form(f, &self.basis)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// True iff `m` is divisible by no leading monomial.
    pub fn is_standard(&self, m: &Monomial) -> bool {
        self.basis.iter().all(|g| !g.lm().divides(m))
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens`, in the ring's order.
/// Zero generators are discarded; no generators gives the zero ideal.
pub fn buchberger(ring: &Arc<PolyRing>, gens: &[Polynomial]) -> Result<GroebnerBasis> {
    for g in gens {
        ring.check_same(g.ring())?;
    }
    Ok(Engine::new(ring, gens, PairStrategy::Normal, false).run().0)
}

/// [`buchberger`] under another order; the result lives in the re-ordered ring.
pub fn buchberger_in_order(
    ring: &Arc<PolyRing>,
    gens: &[Polynomial],
    order: MonomialOrder,
) -> Result<GroebnerBasis> {
    let target = ring.with_order(order)?;
    let moved: Vec<Polynomial> = gens
        .iter()
        .map(|g| ring.check_same(g.ring()).map(|_| g.reorder_into(&target)))
        .collect::<Result<_>>()?;
    buchberger(&target, &moved)
}

pub fn buchberger_with_strategy(
    ring: &Arc<PolyRing>,
    gens: &[Polynomial],
    strategy: PairStrategy,
) -> Result<GroebnerBasis> {
    for g in gens {
        ring.check_same(g.ring())?;
    }
    Ok(Engine::new(ring, gens, strategy, false).run().0)
}

/// Reduced basis together with certificates: `cofactors[k][i]` is the
/// coefficient of `gens[i]` in an expression of basis element `k`.
pub fn buchberger_traced(
    ring: &Arc<PolyRing>,
    gens: &[Polynomial],
) -> Result<(GroebnerBasis, Vec<Vec<Polynomial>>)> {
    for g in gens {
        ring.check_same(g.ring())?;
    }
    let (gb, cof) = Engine::new(ring, gens, PairStrategy::Normal, true).run();
    Ok((gb, cof.expect("tracing enabled")))
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    serial: usize,
}

struct Engine {
    ring: Arc<PolyRing>,
    strategy: PairStrategy,
    polys: Vec<Polynomial>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
    serial: usize,
    ngens: usize,
    cofactors: Option<Vec<Vec<Polynomial>>>,
    unit: Option<usize>,
}

impl Engine {
    fn new(ring: &Arc<PolyRing>, gens: &[Polynomial], strategy: PairStrategy, trace: bool) -> Self {
        let mut engine = Engine {
            ring: ring.clone(),
            strategy,
            polys: Vec::new(),
            active: Vec::new(),
            pairs: Vec::new(),
            serial: 0,
            ngens: gens.len(),
            cofactors: trace.then(Vec::new),
            unit: None,
        };
        let field = ring.field();
        let zero = Polynomial::zero(ring);
        for (k, g) in gens.iter().enumerate() {
            if g.is_zero() {
                continue;
            }
            let inv = field.inv(g.lc()).expect("nonzero leading coefficient");
            let cof = engine.cofactors.as_ref().map(|_| {
                let mut v = vec![zero.clone(); gens.len()];
                v[k] = Polynomial::constant(ring, inv.clone());
                v
            });
            engine.insert(g.scale(&inv), cof);
            if engine.unit.is_some() {
                break;
            }
        }
        engine
    }

    fn insert(&mut self, h: Polynomial, cof: Option<Vec<Polynomial>>) {
        let idx = self.polys.len();
        let is_unit = h.is_unit();
        self.polys.push(h);
        if let (Some(all), Some(c)) = (self.cofactors.as_mut(), cof) {
            all.push(c);
        }
        if is_unit {
            self.unit = Some(idx);
            return;
        }
        self.update(idx);
    }

    /// Gebauer–Möller update: add the pairs of `h` that survive the product
    /// and chain criteria, prune old pairs made redundant by `h`, and retire
    /// basis elements whose leading monomial `h` divides.
    fn update(&mut self, h: usize) {
        let lm_h = self.polys[h].lm().clone();
        let mut c: Vec<(usize, Monomial, bool)> = self
            .active
            .iter()
            .map(|&g| {
                let lm_g = self.polys[g].lm();
                (g, lm_g.lcm(&lm_h), lm_g.is_coprime(&lm_h))
            })
            .collect();
        let mut d: Vec<(usize, Monomial, bool)> = Vec::new();
        while !c.is_empty() {
            let (g1, lcm1, coprime) = c.remove(0);
            let dominated = c.iter().chain(d.iter()).any(|(_, l, _)| l.divides(&lcm1));
            if coprime || !dominated {
                d.push((g1, lcm1, coprime));
            }
        }
        let lm_of = |i: usize| self.polys[i].lm();
        self.pairs.retain(|p| {
            !lm_h.divides(&p.lcm)
                || lm_of(p.i).lcm(&lm_h) == p.lcm
                || lm_of(p.j).lcm(&lm_h) == p.lcm
        });
        for (g, lcm, coprime) in d {
            if !coprime {
                self.pairs.push(Pair { i: g, j: h, lcm, serial: self.serial });
                self.serial += 1;
            }
        }
        let polys = &self.polys;
        self.active.retain(|&g| !lm_h.divides(polys[g].lm()));
        self.active.push(h);
    }

    fn select(&mut self) -> Option<Pair> {
        if self.pairs.is_empty() {
            return None;
        }
        let order = self.ring.order();
        let best = match self.strategy {
            PairStrategy::Normal => (0..self.pairs.len())
                .min_by(|&a, &b| {
                    let (pa, pb) = (&self.pairs[a], &self.pairs[b]);
                    pa.lcm
                        .degree()
                        .cmp(&pb.lcm.degree())
                        .then_with(|| order.cmp(&pa.lcm, &pb.lcm))
                        .then_with(|| pa.serial.cmp(&pb.serial))
                })
                .expect("nonempty"),
            PairStrategy::Fifo => (0..self.pairs.len())
                .min_by_key(|&a| self.pairs[a].serial)
                .expect("nonempty"),
        };
        Some(self.pairs.swap_remove(best))
    }

    fn run(mut self) -> (GroebnerBasis, Option<Vec<Vec<Polynomial>>>) {
        while self.unit.is_none() {
            let Some(pair) = self.select() else { break };
            let field = self.ring.field();
            let (gi, gj) = (&self.polys[pair.i], &self.polys[pair.j]);
            let mi = gi.lm().quotient_of(&pair.lcm).expect("lcm multiple");
            let mj = gj.lm().quotient_of(&pair.lcm).expect("lcm multiple");
            let one = field.one();
            let minus_one = field.neg(&one);
            let s = gi.mul_term(&mi, &one).combine(gj, Some((&minus_one, Some(&mj))));
            let divisors: Vec<Polynomial> = self.active.iter().map(|&k| self.polys[k].clone()).collect();
            let tracing = self.cofactors.is_some();
            let div = reduce(&s, &divisors, tracing);
            if div.remainder.is_zero() {
                continue;
            }
            let inv = field.inv(div.remainder.lc()).expect("nonzero");
            let h = div.remainder.scale(&inv);
            let cof = self.cofactors.as_ref().map(|all| {
                let mut v: Vec<Polynomial> = (0..self.ngens)
                    .map(|k| {
                        let a = all[pair.i][k].mul_term(&mi, &one);
                        a.combine(&all[pair.j][k], Some((&minus_one, Some(&mj))))
                    })
                    .collect();
                for (q, &idx) in div.quotients.iter().zip(&self.active) {
                    if q.is_zero() {
                        continue;
                    }
                    for (k, slot) in v.iter_mut().enumerate() {
                        *slot = &*slot - &(q * &all[idx][k]);
                    }
                }
                v.into_iter().map(|p| p.scale(&inv)).collect()
            });
            self.insert(h, cof);
        }
        self.finish()
    }

    fn finish(self) -> (GroebnerBasis, Option<Vec<Vec<Polynomial>>>) {
        let ring = self.ring.clone();
        if let Some(u) = self.unit {
            let basis = vec![Polynomial::one(&ring)];
            let cof = self.cofactors.map(|all| vec![all[u].clone()]);
            return (GroebnerBasis::from_reduced(&ring, basis), cof);
        }
        let order = ring.order();
        let mut idx: Vec<usize> = self.active.clone();
        idx.sort_by(|&a, &b| order.cmp(self.polys[a].lm(), self.polys[b].lm()));
        let mut kept: Vec<usize> = Vec::new();
        for &i in &idx {
            if kept.iter().all(|&k| !self.polys[k].lm().divides(self.polys[i].lm())) {
                kept.push(i);
            }
        }
        let field = ring.field();
        let mut basis = Vec::with_capacity(kept.len());
        let mut cofs = Vec::new();
        for (pos, &i) in kept.iter().enumerate() {
            let others: Vec<usize> = kept.iter().enumerate().filter(|(p, _)| *p != pos).map(|(_, &k)| k).collect();
            let divisors: Vec<Polynomial> = others.iter().map(|&k| self.polys[k].clone()).collect();
            let div = reduce(&self.polys[i], &divisors, self.cofactors.is_some());
            let inv = field.inv(div.remainder.lc()).expect("leading term survives");
            basis.push(div.remainder.scale(&inv));
            if let Some(all) = &self.cofactors {
                let mut v = all[i].clone();
                for (q, &k) in div.quotients.iter().zip(&others) {
                    if q.is_zero() {
                        continue;
                    }
                    for (slot, c) in v.iter_mut().zip(&all[k]) {
                        *slot = &*slot - &(q * c);
                    }
                }
                cofs.push(v.into_iter().map(|p| p.scale(&inv)).collect());
            }
        }
        let cof = self.cofactors.map(|_| cofs);
        (GroebnerBasis::from_reduced(&ring, basis), cof)
    }
}
