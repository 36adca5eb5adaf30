//! Ideals of `R = S/a` and the operations on them.
//!
//! An ideal of `R` is stored by representatives in `S`, reduced modulo the
//! defining ideal. Everything that needs a Gröbner basis works with the
//! preimage `gens + a` in `S`.

use std::fmt;
use std::sync::{Arc, OnceLock};

use rayon::prelude::*;

use crate::division::exact_quotient;
use crate::error::{Error, Result};
use crate::groebner::{cache, GroebnerBasis};
use crate::monomial::MonomialOrder;
use crate::poly::Polynomial;
use crate::presentation::RingPresentation;
use crate::ring::PolyRing;

#[derive(Clone, Debug)]
pub struct Ideal {
    pres: Arc<RingPresentation>,
    gens: Vec<Polynomial>,
    basis: OnceLock<Arc<GroebnerBasis>>,
}

impl Ideal {
    /// Generators are reduced modulo the defining ideal; zeros and scalar
    /// multiples of earlier generators are dropped.
    pub fn new(pres: &Arc<RingPresentation>, gens: Vec<Polynomial>) -> Result<Ideal> {
        let ring = pres.poly_ring();
        for g in &gens {
            ring.check_same(g.ring())?;
        }
        let defining = if pres.relations().is_empty() { None } else { Some(pres.defining_basis()?) };
        let mut out: Vec<Polynomial> = Vec::with_capacity(gens.len());
        let mut seen = std::collections::HashSet::new();
        for g in gens {
            let g = match &defining {
                Some(gb) => gb.normal_form(&g)?,
                None => g,
            };
            if g.is_zero() {
                continue;
            }
            if seen.insert(g.monic()) {
                out.push(g);
            }
        }
        Ok(Ideal { pres: pres.clone(), gens: out, basis: OnceLock::new() })
    }

    pub fn presentation(&self) -> &Arc<RingPresentation> {
        &self.pres
    }

    pub fn poly_ring(&self) -> &Arc<PolyRing> {
        self.pres.poly_ring()
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    /// Generators of the preimage in `S`: the generators plus the relations.
    pub fn preimage_gens(&self) -> Vec<Polynomial> {
        let mut all = self.gens.clone();
        all.extend(self.pres.relations().iter().cloned());
        all
    }

    /// Reduced Gröbner basis of the preimage in `S`.
    pub fn basis(&self) -> Result<Arc<GroebnerBasis>> {
        if let Some(gb) = self.basis.get() {
            return Ok(gb.clone());
        }
        let gb = cache::groebner_basis(self.poly_ring(), &self.preimage_gens())?;
        Ok(self.basis.get_or_init(|| gb).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.basis()?.is_unit())
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        self.basis()?.normal_form(f)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        self.basis()?.contains(f)
    }

    /// First generator of `self` not in `other`, if any.
    pub fn containment_witness(&self, other: &Ideal) -> Result<Option<Polynomial>> {
        self.same_ring(other)?;
        let gb = other.basis()?;
        for g in &self.gens {
            if !gb.contains(g)? {
                return Ok(Some(g.clone()));
            }
        }
        Ok(None)
    }

    pub fn is_subset(&self, other: &Ideal) -> Result<bool> {
        Ok(self.containment_witness(other)?.is_none())
    }

    /// Equality as ideals: the reduced bases coincide.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        self.same_ring(other)?;
        Ok(self.basis()?.elements() == other.basis()?.elements())
    }

    fn same_ring(&self, other: &Ideal) -> Result<()> {
        self.pres.check_same(&other.pres)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.pres, gens)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        let gens: Vec<Polynomial> = self
            .gens
            .par_iter()
            .flat_map_iter(|a| other.gens.iter().map(move |b| a.mul_unchecked(b)))
            .collect();
        Ideal::new(&self.pres, gens)
    }

    /// `n`-th power, `n >= 1`.
    pub fn power(&self, n: u32) -> Result<Ideal> {
        if n == 0 {
            return Err(Error::Precondition("power exponent must be at least 1".into()));
        }
        let mut acc = self.clone();
        for _ in 1..n {
            acc = acc.compact()?.product(self)?;
        }
        Ok(acc)
    }

    /// The same ideal with the shorter of its generator list and its reduced
    /// basis (taken modulo the defining ideal) as generators.
    pub fn compact(&self) -> Result<Ideal> {
        let gb = self.basis()?;
        if gb.len() >= self.gens.len() {
            return Ok(self.clone());
        }
        let compacted = Ideal::new(&self.pres, gb.elements().to_vec())?;
        if compacted.gens.len() >= self.gens.len() {
            return Ok(self.clone());
        }
        let _ = compacted.basis.set(gb);
        Ok(compacted)
    }

    /// `I ∩ J`, by eliminating a tag variable from `t*I + (1 - t)*J`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(self.pres.zero_ideal());
        }
        let ring = self.poly_ring();
        let (ext, embed) = tagged_ring(ring)?;
        let t = Polynomial::variable(&ext, 0);
        let one_minus_t = &Polynomial::one(&ext) - &t;
        let mut gens: Vec<Polynomial> = Vec::new();
        gens.extend(self.gens.iter().map(|g| t.mul_unchecked(&g.map_vars(&ext, &embed))));
        gens.extend(other.gens.iter().map(|g| one_minus_t.mul_unchecked(&g.map_vars(&ext, &embed))));
        gens.extend(self.pres.relations().iter().map(|g| g.map_vars(&ext, &embed)));
        let kept = eliminate_polys(&ext, &gens, &[0])?;
        let back = project_map(ext.nvars());
        Ideal::new(&self.pres, kept.iter().map(|g| g.map_vars(ring, &back)).collect())
    }

    /// `I : f`.
    pub fn colon_poly(&self, f: &Polynomial) -> Result<Ideal> {
        self.pres.poly_ring().check_same(f.ring())?;
        let f = self.pres.reduce(f)?;
        if f.is_zero() {
            return Err(Error::ColonByZero);
        }
        if f.is_unit() {
            return Ok(self.clone());
        }
        let ring = self.poly_ring();
        let (ext, embed) = tagged_ring(ring)?;
        let t = Polynomial::variable(&ext, 0);
        let one_minus_t = &Polynomial::one(&ext) - &t;
        let mut gens: Vec<Polynomial> = self
            .preimage_gens()
            .iter()
            .map(|g| t.mul_unchecked(&g.map_vars(&ext, &embed)))
            .collect();
        gens.push(one_minus_t.mul_unchecked(&f.map_vars(&ext, &embed)));
        let kept = eliminate_polys(&ext, &gens, &[0])?;
        let back = project_map(ext.nvars());
        let quotients = kept
            .iter()
            .map(|g| {
                exact_quotient(&g.map_vars(ring, &back), &f).map_err(|_| {
                    Error::InexactDivision(format!("intersection generator {g} is not a multiple of {f}"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(&self.pres, quotients)
    }

    /// `I : J`, intersecting the colons by the generators of `J`.
    pub fn colon(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        if other.is_zero() {
            return Err(Error::ColonByZero);
        }
        let parts: Vec<Ideal> = other
            .gens
            .par_iter()
            .map(|f| self.colon_poly(f))
            .collect::<Result<_>>()?;
        let mut iter = parts.into_iter();
        let mut acc = iter.next().expect("at least one generator");
        for part in iter {
            if acc.is_subset(&part)? {
                continue;
            }
            acc = if part.is_subset(&acc)? { part } else { acc.intersect(&part)? };
        }
        Ok(acc)
    }

    /// `(I + a) ∩ k[other variables]`, as an ideal of the polynomial ring in
    /// the remaining variables.
    pub fn eliminate(&self, block: &[&str]) -> Result<Ideal> {
        let ring = self.poly_ring();
        let idx: Vec<usize> = block.iter().map(|v| ring.require_var(v)).collect::<Result<_>>()?;
        let kept = eliminate_polys(ring, &self.preimage_gens(), &idx)?;
        let remaining: Vec<usize> = (0..ring.nvars()).filter(|i| !idx.contains(i)).collect();
        let names: Vec<&str> = remaining.iter().map(|&i| ring.names()[i].as_str()).collect();
        let target = PolyRing::new(ring.field(), &names, base_order(ring.order()))?;
        let mut map = vec![0usize; ring.nvars()];
        for (new, &old) in remaining.iter().enumerate() {
            map[old] = new;
        }
        let pres = RingPresentation::free(target.clone());
        Ideal::new(&pres, kept.iter().map(|g| g.map_vars(&target, &map)).collect())
    }

    /// Krull dimension of `R/I`, from the leading monomials: the largest set
    /// of variables containing the support of no leading monomial.
    pub fn krull_dimension(&self) -> Result<usize> {
        let gb = self.basis()?;
        if gb.is_unit() {
            return Err(Error::UnitIdeal);
        }
        let n = self.poly_ring().nvars();
        if n > 64 {
            return Err(Error::ResourceCap(format!("dimension search over {n} variables")));
        }
        let masks: Vec<u64> = gb.leading_monomials().map(|m| m.support_mask()).collect();
        let mut best = 0;
        independent_sets(&masks, n, 0, 0, 0, &mut best);
        Ok(best)
    }

    /// Ok iff `R/I` is finite-dimensional and supported only at the origin;
    /// otherwise names the first variable that fails.
    pub fn origin_primary_check(&self) -> Result<()> {
        let gb = self.basis()?;
        if gb.is_unit() {
            return Ok(());
        }
        let ring = self.poly_ring();
        let pure: Vec<usize> = gb.leading_monomials().filter_map(|m| m.pure_power_var()).collect();
        for (i, name) in ring.names().iter().enumerate() {
            if !pure.contains(&i) {
                return Err(Error::NotOriginPrimary {
                    variable: name.clone(),
                    reason: "has no pure power among the leading monomials (quotient is infinite-dimensional)"
                        .into(),
                });
            }
        }
        let homogeneous = self.pres.is_graded() && self.gens.iter().all(Polynomial::is_homogeneous);
        if homogeneous {
            return Ok(());
        }
        for i in 0..ring.nvars() {
            if !self.radical_contains_variable(i)? {
                return Err(Error::NotOriginPrimary {
                    variable: ring.names()[i].clone(),
                    reason: "is not in the radical (quotient has support away from the origin)".into(),
                });
            }
        }
        Ok(())
    }

    pub fn is_origin_primary(&self) -> Result<bool> {
        match self.origin_primary_check() {
            Ok(()) => Ok(true),
            Err(Error::NotOriginPrimary { .. }) => Ok(false),
            Err(e) => Err(e),
        }
    }

    /// Whether `f` lies in the radical: `1 ∈ I + a + (t*f - 1)`.
    pub fn radical_contains(&self, f: &Polynomial) -> Result<bool> {
        let ring = self.poly_ring();
        ring.check_same(f.ring())?;
        let (ext, embed) = tagged_ring(ring)?;
        let t = Polynomial::variable(&ext, 0);
        let mut gens: Vec<Polynomial> = self.preimage_gens().iter().map(|g| g.map_vars(&ext, &embed)).collect();
        gens.push(&t.mul_unchecked(&f.map_vars(&ext, &embed)) - &Polynomial::one(&ext));
        Ok(cache::groebner_basis(&ext, &gens)?.is_unit())
    }

    fn radical_contains_variable(&self, i: usize) -> Result<bool> {
        self.radical_contains(&Polynomial::variable(self.poly_ring(), i))
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return write!(f, "(0)");
        }
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

fn independent_sets(masks: &[u64], n: usize, var: usize, set: u64, size: usize, best: &mut usize) {
    if size + (n - var) <= *best {
        return;
    }
    if var == n {
        *best = size;
        return;
    }
    let with = set | (1u64 << var);
    if masks.iter().all(|m| m & !with != 0) {
        independent_sets(masks, n, var + 1, with, size + 1, best);
    }
    independent_sets(masks, n, var + 1, set, size, best);
}

fn base_order(order: MonomialOrder) -> MonomialOrder {
    match order {
        MonomialOrder::Elimination { .. } => MonomialOrder::DegRevLex,
        o => o,
    }
}

fn fresh_name(names: &[String], base: &str) -> String {
    let mut name = base.to_string();
    while names.contains(&name) {
        name.push('_');
    }
    name
}

/// `S[t]` with the tag `t` as variable 0, and the embedding of `S`.
fn tagged_ring(ring: &Arc<PolyRing>) -> Result<(Arc<PolyRing>, Vec<usize>)> {
    let mut names = vec![fresh_name(ring.names(), "t")];
    names.extend(ring.names().iter().cloned());
    let ext = PolyRing::new(ring.field(), &names, base_order(ring.order()))?;
    Ok((ext, (1..=ring.nvars()).collect()))
}

/// Drops the tag variable 0 (which must not occur).
fn project_map(ext_vars: usize) -> Vec<usize> {
    (0..ext_vars).map(|i| i.saturating_sub(1)).collect()
}

/// Elements of the reduced basis of `(gens)` free of the `block` variables,
/// computed under an elimination order and returned in the original ring.
pub(crate) fn eliminate_polys(ring: &Arc<PolyRing>, gens: &[Polynomial], block: &[usize]) -> Result<Vec<Polynomial>> {
    let n = ring.nvars();
    let mut perm: Vec<usize> = block.to_vec();
    perm.extend((0..n).filter(|i| !block.contains(i)));
    let names: Vec<&str> = perm.iter().map(|&i| ring.names()[i].as_str()).collect();
    let elim = PolyRing::new(ring.field(), &names, MonomialOrder::Elimination { block: block.len() })?;
    let mut forward = vec![0usize; n];
    for (new, &old) in perm.iter().enumerate() {
        forward[old] = new;
    }
    let moved: Vec<Polynomial> = gens.iter().map(|g| g.map_vars(&elim, &forward)).collect();
    let gb = cache::groebner_basis(&elim, &moved)?;
    let k = block.len();
    Ok(gb
        .elements()
        .iter()
        .filter(|g| (0..k).all(|v| !g.involves(v)))
        .map(|g| g.map_vars(ring, &perm))
        .collect())
}

/// Kernel of `k[pres_vars] -> target`, `pres_vars[i] -> images[i]`, as an ideal
/// of the polynomial ring in the presentation variables.
pub fn subalgebra_presentation(
    target: &Arc<RingPresentation>,
    images: &[Polynomial],
    pres_vars: &[&str],
) -> Result<Ideal> {
    if images.len() != pres_vars.len() {
        return Err(Error::Precondition(format!(
            "{} images for {} presentation variables",
            images.len(),
            pres_vars.len()
        )));
    }
    let tring = target.poly_ring();
    for (v, img) in pres_vars.iter().zip(images) {
        tring.check_same(img.ring())?;
        if tring.var_index(v).is_some() {
            return Err(Error::InvalidRing(format!("presentation variable `{v}` clashes with the target ring")));
        }
    }
    let mut names: Vec<String> = tring.names().to_vec();
    names.extend(pres_vars.iter().map(|s| s.to_string()));
    let graph_ring = PolyRing::new(tring.field(), &names, MonomialOrder::DegRevLex)?;
    let nt = tring.nvars();
    let embed: Vec<usize> = (0..nt).collect();
    let mut gens: Vec<Polynomial> = pres_vars
        .iter()
        .enumerate()
        .map(|(k, _)| &Polynomial::variable(&graph_ring, nt + k) - &images[k].map_vars(&graph_ring, &embed))
        .collect();
    gens.extend(target.relations().iter().map(|r| r.map_vars(&graph_ring, &embed)));
    let graph = Ideal::new(&RingPresentation::free(graph_ring), gens)?;
    let block: Vec<&str> = tring.names().iter().map(String::as_str).collect();
    let kernel = graph.eliminate(&block)?;
    Ok(kernel)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(spec: &str) -> Arc<RingPresentation> {
        RingPresentation::parse(spec).unwrap()
    }

    #[test]
    fn sums_products_and_powers() {
        let r = ring("Q[x,y]");
        let x = r.parse_ideal("(x)").unwrap();
        let y = r.parse_ideal("(y)").unwrap();
        assert!(x.sum(&y).unwrap().equals(&r.parse_ideal("(x, y)").unwrap()).unwrap());
        let m = r.max_ideal().unwrap();
        assert!(m.product(&m).unwrap().equals(&r.parse_ideal("(x^2, x*y, y^2)").unwrap()).unwrap());
        assert!(m.power(3).unwrap().equals(&m.product(&m).unwrap().product(&m).unwrap()).unwrap());
        assert!(m.power(0).is_err());
    }

    #[test]
    fn intersections() {
        let r = ring("Q[x,y]");
        let i = r.parse_ideal("(x)").unwrap().intersect(&r.parse_ideal("(y)").unwrap()).unwrap();
        assert!(i.equals(&r.parse_ideal("(x*y)").unwrap()).unwrap());
        let i = r.parse_ideal("(x^2, y)").unwrap().intersect(&r.parse_ideal("(x)").unwrap()).unwrap();
        assert!(i.equals(&r.parse_ideal("(x^2, x*y)").unwrap()).unwrap());
    }

    #[test]
    fn colons() {
        let r = ring("Q[x,y]");
        let c = r.parse_ideal("(x^2)").unwrap().colon(&r.parse_ideal("(x)").unwrap()).unwrap();
        assert!(c.equals(&r.parse_ideal("(x)").unwrap()).unwrap());
        assert_eq!(r.parse_ideal("(x)").unwrap().colon(&r.zero_ideal()).unwrap_err(), Error::ColonByZero);

        let node = ring("F101[x,y] / (x*y)");
        let q = node.parse_ideal("(x + y)").unwrap();
        let c = q.colon(&node.max_ideal().unwrap()).unwrap();
        assert!(c.equals(&node.max_ideal().unwrap()).unwrap());
    }

    #[test]
    fn eliminations() {
        let r = ring("Q[t,x,y]");
        assert!(r.parse_ideal("(t*x - 1)").unwrap().eliminate(&["t"]).unwrap().is_zero());
        let e = r.parse_ideal("(t*x, (1 - t)*y)").unwrap().eliminate(&["t"]).unwrap();
        assert_eq!(e.to_string(), "(x*y)");
        let cusp = ring("Q[t,p,q]").parse_ideal("(p - t^2, q - t^3)").unwrap().eliminate(&["t"]).unwrap();
        assert_eq!(cusp.gens().len(), 1);
        let g = &cusp.gens()[0];
        let pr = cusp.poly_ring();
        let expected = crate::text::parse_polynomial(pr, "p^3 - q^2").unwrap();
        assert_eq!(g.monic(), expected.monic());
    }

    #[test]
    fn dimensions() {
        let r = ring("Q[x,y]");
        assert_eq!(r.zero_ideal().krull_dimension().unwrap(), 2);
        assert_eq!(r.parse_ideal("(x^2, y^3)").unwrap().krull_dimension().unwrap(), 0);
        assert_eq!(r.parse_ideal("(1)").unwrap().krull_dimension().unwrap_err(), Error::UnitIdeal);
        let fiber = ring("F101[x1,x2,y1,y2] / (x1*y1, x1*y2, x2*y1, x2*y2)");
        assert_eq!(fiber.dimension().unwrap(), 2);
    }

    #[test]
    fn origin_primary() {
        let r = ring("Q[x,y]");
        assert!(r.parse_ideal("(x^2, y^3)").unwrap().is_origin_primary().unwrap());
        assert!(!r.parse_ideal("(x)").unwrap().is_origin_primary().unwrap());
        assert!(r.parse_ideal("(x*y, x + y)").unwrap().is_origin_primary().unwrap());
        // finite but with a point at (1, 0)
        let err = r.parse_ideal("(x^2 - x, y)").unwrap().origin_primary_check().unwrap_err();
        assert!(matches!(err, Error::NotOriginPrimary { ref variable, .. } if variable == "x"), "{err}");
        assert!(r.parse_ideal("(x^2 + x^3, y - x^2)").unwrap().is_origin_primary().unwrap() == false);
        assert!(r.parse_ideal("(x^2 + y^3, y^2)").unwrap().is_origin_primary().unwrap());
    }

    #[test]
    fn presentations() {
        let k = ring("Q[t]");
        let t = k.var("t").unwrap();
        let ker = subalgebra_presentation(&k, &[t.pow(2), t.pow(3)], &["p", "q"]).unwrap();
        let expected = crate::text::parse_polynomial(ker.poly_ring(), "p^3 - q^2").unwrap();
        assert_eq!(ker.gens().len(), 1);
        assert_eq!(ker.gens()[0].monic(), expected.monic());

        let kx = ring("Q[x]");
        let ker = subalgebra_presentation(&kx, &[kx.var("x").unwrap()], &["y"]).unwrap();
        assert!(ker.is_zero());
    }
}
