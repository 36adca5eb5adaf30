//! Proptest strategies for small random inputs, rendered as source text so
//! the library parses them itself.

use proptest::collection::vec;
use proptest::prelude::*;
use std::collections::BTreeMap;

/// `(coefficient, exponents)` pairs.
pub type Terms = Vec<(i64, Vec<u32>)>;

pub const NAMES: [&str; 3] = ["x", "y", "z"];

/// `x^a*y^b` style text; the empty product is `1`.
pub fn render_monomial(exps: &[u32], names: &[&str]) -> String {
    let factors: Vec<String> = exps
        .iter()
        .zip(names)
        .filter(|(e, _)| **e > 0)
        .map(|(e, n)| if *e == 1 { n.to_string() } else { format!("{n}^{e}") })
        .collect();
    if factors.is_empty() {
        "1".into()
    } else {
        factors.join("*")
    }
}

/// Polynomial text, `0` when there are no terms.
pub fn render(terms: &[(i64, Vec<u32>)], names: &[&str]) -> String {
    let mut out = String::new();
    for (c, e) in terms.iter().filter(|(c, _)| *c != 0) {
        let sign = if *c < 0 { "-" } else { "+" };
        if out.is_empty() {
            if *c < 0 {
                out.push('-');
            }
        } else {
            out.push_str(&format!(" {sign} "));
        }
        out.push_str(&format!("{}*{}", c.abs(), render_monomial(e, names)));
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

/// Ideal text `(g1, g2, ...)`.
pub fn render_ideal(gens: &[Terms], names: &[&str]) -> String {
    let parts: Vec<String> = gens.iter().map(|g| render(g, names)).collect();
    format!("({})", parts.join(", "))
}

pub fn render_monomial_ideal(gens: &[Vec<u32>], names: &[&str]) -> String {
    let parts: Vec<String> = gens.iter().map(|g| render_monomial(g, names)).collect();
    format!("({})", parts.join(", "))
}

/// Ring text `F<p>[x, y, ...]` over the first `nvars` names.
pub fn ring_text(field: &str, nvars: usize) -> String {
    format!("{field}[{}]", NAMES[..nvars].join(","))
}

fn exponents(nvars: usize, max_deg: u32) -> impl Strategy<Value = Vec<u32>> {
    vec(0..=max_deg, nvars).prop_filter("degree bound", move |e| e.iter().sum::<u32>() <= max_deg)
}

/// Exponent vectors of total degree exactly `deg`.
fn exponents_of_degree(nvars: usize, deg: u32) -> impl Strategy<Value = Vec<u32>> {
    vec(0..=deg, nvars - 1).prop_filter_map("degree bound", move |head| {
        let s: u32 = head.iter().sum();
        (s <= deg).then(|| {
            let mut e = head;
            e.push(deg - s);
            e
        })
    })
}

/// Polynomials with small integer coefficients and degree at most `max_deg`.
pub fn poly(nvars: usize, max_deg: u32, max_terms: usize) -> impl Strategy<Value = Terms> {
    vec((-5i64..=5, exponents(nvars, max_deg)), 1..=max_terms)
}

/// Nonzero polynomials without constant term.
pub fn nonunit_poly(nvars: usize, max_deg: u32, max_terms: usize) -> impl Strategy<Value = Terms> {
    vec(
        (
            prop_oneof![-5i64..=-1, 1i64..=5],
            exponents(nvars, max_deg).prop_filter("no constant", |e| e.iter().any(|&k| k > 0)),
        ),
        1..=max_terms,
    )
    .prop_filter("nonzero", |t| {
        let mut sum: BTreeMap<&Vec<u32>, i64> = BTreeMap::new();
        for (c, e) in t {
            *sum.entry(e).or_default() += c;
        }
        sum.values().any(|&c| c % 101 != 0)
    })
}



/// Homogeneous polynomials of degree `deg`.
pub fn homogeneous(nvars: usize, deg: u32, max_terms: usize) -> impl Strategy<Value = Terms> {
    vec((prop_oneof![-5i64..=-1, 1i64..=5], exponents_of_degree(nvars, deg)), 1..=max_terms)
}

/// Homogeneous polynomial of a random degree in `1..=max_deg`.
pub fn homogeneous_upto(nvars: usize, max_deg: u32, max_terms: usize) -> impl Strategy<Value = Terms> {
    (1..=max_deg).prop_flat_map(move |d| homogeneous(nvars, d, max_terms))
}

/// Monomial generators of an origin-primary monomial ideal: a pure power of
/// every variable plus a few mixed monomials.
pub fn staircase(nvars: usize) -> impl Strategy<Value = Vec<Vec<u32>>> {
    (vec(1u32..=5, nvars), vec(vec(0u32..=3, nvars), 0..=3)).prop_map(move |(pure, mixed)| {
        let mut gens: Vec<Vec<u32>> = (0..nvars)
            .map(|i| {
                let mut e = vec![0; nvars];
                e[i] = pure[i];
                e
            })
            .collect();
        gens.extend(mixed.into_iter().filter(|e| e.iter().any(|&k| k > 0)));
        gens
    })
}

/// Exponents of a monomial regular sequence `x_1^a_1, ..., x_n^a_n`.
pub fn pure_powers(nvars: usize) -> impl Strategy<Value = Vec<u32>> {
    vec(1u32..=5, nvars)
}

/// Parse-able polynomial text over the given names, exercising the whole
/// expression grammar (parentheses, powers, unary minus).
pub fn poly_expr_text(names: &'static [&'static str]) -> impl Strategy<Value = String> {
    let leaf = prop_oneof![
        (0u32..20).prop_map(|n| n.to_string()),
        proptest::sample::select(names).prop_map(str::to_string),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("({a} + {b})")),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("({a} - {b})")),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("{a}*{b}")),
            (inner.clone(), 0u32..4).prop_map(|(a, n)| format!("({a})^{n}")),
            inner.prop_map(|a| format!("-({a})")),
        ]
    })
}
