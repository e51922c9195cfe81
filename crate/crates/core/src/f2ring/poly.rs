//! Monomials and polynomials over 𝔽₂ in the generators of a presentation.

use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// A monomial as an exponent vector over the presentation's generators.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Monomial {
    pub exps: Vec<u32>,
}

impl Monomial {
    pub fn one(num_gens: usize) -> Self {
        Self {
            exps: vec![0; num_gens],
        }
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn degree(&self, gen_degrees: &[usize]) -> usize {
        self.exps
            .iter()
            .zip(gen_degrees)
            .map(|(&e, &d)| e as usize * d)
            .sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn render(&self, gen_names: &[String]) -> String {
        let mut parts = Vec::new();
        for (i, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(gen_names[i].clone()),
                _ => parts.push(format!("{}^{e}", gen_names[i])),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

/// A polynomial over 𝔽₂: a set of monomials (a monomial appearing twice
/// cancels).
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Poly {
    pub monomials: BTreeSet<Monomial>,
}

impl Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_monomial(m: Monomial) -> Self {
        let mut s = BTreeSet::new();
        s.insert(m);
        Self { monomials: s }
    }

    pub fn is_zero(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn toggle(&mut self, m: Monomial) {
        if !self.monomials.remove(&m) {
            self.monomials.insert(m);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for m in &other.monomials {
            out.toggle(m.clone());
        }
        out
    }

    /// The common degree of the monomials, or `None` for the zero
    /// polynomial or a non-homogeneous one.
    pub fn homogeneous_degree(&self, gen_degrees: &[usize]) -> Option<usize> {
        let mut it = self.monomials.iter();
        let first = it.next()?.degree(gen_degrees);
        it.all(|m| m.degree(gen_degrees) == first).then_some(first)
    }

    pub fn render(&self, gen_names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.monomials
            .iter()
            .map(|m| m.render(gen_names))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Parses a polynomial in the presentation text format: `+`-separated
/// monomials, each a `*`-joined list of `name` or `name^power` factors;
/// `0` is the zero polynomial and `1` the empty monomial.
pub fn parse_poly(input: &str, gen_names: &[String]) -> Result<Poly, String> {
    let trimmed = input.trim();
    if trimmed.is_empty() {
        return Err("empty polynomial".to_string());
    }
    if trimmed == "0" {
        return Ok(Poly::zero());
    }
    let mut poly = Poly::zero();
    for term in trimmed.split('+') {
        poly.toggle(parse_monomial(term, gen_names)?);
    }
    Ok(poly)
}

pub fn parse_monomial(input: &str, gen_names: &[String]) -> Result<Monomial, String> {
    let trimmed = input.trim();
    if trimmed.is_empty() {
        return Err("empty monomial".to_string());
    }
    let mut mon = Monomial::one(gen_names.len());
    if trimmed == "1" {
        return Ok(mon);
    }
    for factor in trimmed.split('*') {
        let factor = factor.trim();
        let (name, power) = match factor.split_once('^') {
            Some((n, p)) => {
                let power: u32 = p
                    .trim()
                    .parse()
                    .map_err(|_| format!("bad exponent in '{factor}'"))?;
                (n.trim(), power)
            }
            None => (factor, 1),
        };
        let idx = gen_names
            .iter()
            .position(|g| g == name)
            .ok_or_else(|| format!("unknown generator '{name}'"))?;
        mon.exps[idx] += power;
    }
    Ok(mon)
}
