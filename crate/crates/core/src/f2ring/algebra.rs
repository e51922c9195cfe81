//! Finite-dimensional graded-commutative 𝔽₂ algebras from presentations.

use super::poly::{parse_monomial, parse_poly, Monomial, Poly};
use crate::exact::F2Matrix;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    /// A relation forces 1 = 0.
    #[error("inconsistent presentation: the relations force 1 = 0")]
    InconsistentPresentation,
    #[error("relation '{0}' is not homogeneous")]
    NonHomogeneousRelation(String),
    #[error("degree {degree} exceeds the truncation degree {top}")]
    DegreeOverflow { degree: usize, top: usize },
    #[error("the duality pairing is singular in degree {degree}")]
    SingularPairing { degree: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("a homogeneous class is required, got mixed degrees in '{0}'")]
    MixedDegrees(String),
    #[error("invalid Sq1 assignment for generator '{0}'")]
    InvalidSq1(String),
    #[error("operation needs a {expected}-dimensional ring, got top degree {got}")]
    WrongDimension { expected: usize, got: usize },
    #[error("the ring has no fundamental class")]
    MissingFundamental,
}

/// A homogeneous class, stored as coordinates over the monomial basis of
/// its degree. Degrees above the truncation degree are representable only
/// by the zero class (empty coordinates).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct F2Class {
    pub degree: usize,
    pub coords: Vec<u8>,
}

impl F2Class {
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }
}

/// Presentation data for a graded-commutative 𝔽₂ algebra truncated at
/// `top` degree.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct RingPresentation {
    pub generators: Vec<(String, usize)>,
    pub relations: Vec<Poly>,
    pub top: usize,
    /// Sq¹ on generators of degree ≥ 2, as polynomials. Degree-1
    /// generators square; anything unspecified is zero.
    pub sq1: Vec<(usize, Poly)>,
    pub fundamental: Option<Monomial>,
}

struct DegreeData {
    monomials: Vec<Monomial>,
    mon_index: HashMap<Monomial, usize>,
    /// Columns of the monomial list that survive as basis classes.
    basis_cols: Vec<usize>,
    /// For each reducible (pivot) column, its expansion over `basis_cols`.
    rewrite: HashMap<usize, Vec<u8>>,
}

/// A graded-commutative 𝔽₂ algebra with a canonical monomial basis per
/// degree, built once from its presentation by exhaustive reduction. All
/// rings in this crate have at most a handful of basis elements per degree,
/// so no Gröbner machinery is involved.
pub struct GradedF2Algebra {
    presentation: RingPresentation,
    gen_names: Vec<String>,
    gen_degrees: Vec<usize>,
    degrees: Vec<DegreeData>,
    /// Convention note for Steenrod operations on generators.
    pub sq_rule: &'static str,
}

impl GradedF2Algebra {
    /// Builds the canonical basis and rewrite tables from a presentation.
    pub fn build(presentation: RingPresentation) -> Result<Self, RingError> {
        let gen_names: Vec<String> = presentation
            .generators
            .iter()
            .map(|g| g.0.clone())
            .collect();
        let gen_degrees: Vec<usize> = presentation.generators.iter().map(|g| g.1).collect();
        if gen_degrees.contains(&0) {
            return Err(RingError::Parse("generator of degree 0".to_string()));
        }
        for rel in &presentation.relations {
            if rel.is_zero() {
                continue;
            }
            if rel.homogeneous_degree(&gen_degrees).is_none() {
                return Err(RingError::NonHomogeneousRelation(rel.render(&gen_names)));
            }
        }
        for (gi, poly) in &presentation.sq1 {
            let gdeg = gen_degrees[*gi];
            if gdeg == 1 {
                // Forced: Sq¹ of a degree-1 class is its square.
                let mut square = Monomial::one(gen_names.len());
                square.exps[*gi] = 2;
                let forced = Poly::from_monomial(square);
                if *poly != forced && !poly.is_zero() {
                    return Err(RingError::InvalidSq1(gen_names[*gi].clone()));
                }
            } else if !poly.is_zero() && poly.homogeneous_degree(&gen_degrees) != Some(gdeg + 1) {
                return Err(RingError::InvalidSq1(gen_names[*gi].clone()));
            }
        }

        let top = presentation.top;
        let mut degrees = Vec::with_capacity(top + 1);
        for d in 0..=top {
            degrees.push(Self::build_degree(&presentation, &gen_degrees, d)?);
        }
        if degrees[0].basis_cols.is_empty() {
            return Err(RingError::InconsistentPresentation);
        }

        let ring = Self {
            presentation,
            gen_names,
            gen_degrees,
            degrees,
            sq_rule: "Sq^k g = 0 for 0 < k < |g| unless listed in the sq1 table",
        };
        if ring.presentation.fundamental.is_some() {
            ring.check_duality()?;
        }
        Ok(ring)
    }

    /// Monomials of exact total degree `d`, exponents bounded by the degree
    /// budget, in descending lexicographic order of exponent vectors (so
    /// earlier generators lead).
    fn monomials_of_degree(gen_degrees: &[usize], d: usize) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut exps = vec![0u32; gen_degrees.len()];
        fn recurse(
            gen_degrees: &[usize],
            idx: usize,
            remaining: usize,
            exps: &mut Vec<u32>,
            out: &mut Vec<Monomial>,
        ) {
            if idx == gen_degrees.len() {
                if remaining == 0 {
                    out.push(Monomial { exps: exps.clone() });
                }
                return;
            }
            let gd = gen_degrees[idx];
            for e in 0..=(remaining / gd) as u32 {
                exps[idx] = e;
                recurse(gen_degrees, idx + 1, remaining - e as usize * gd, exps, out);
            }
            exps[idx] = 0;
        }
        recurse(gen_degrees, 0, d, &mut exps, &mut out);
        out.sort_by(|a, b| b.cmp(a));
        out
    }

    /// Spans the degree-`d` piece of the relation ideal by all monomial
    /// multiples of the relations, then reads the basis and rewrite rules
    /// off the reduced echelon form.
    fn build_degree(
        presentation: &RingPresentation,
        gen_degrees: &[usize],
        d: usize,
    ) -> Result<DegreeData, RingError> {
        let monomials = Self::monomials_of_degree(gen_degrees, d);
        let mon_index: HashMap<Monomial, usize> = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();

        let mut span_rows: Vec<Vec<u8>> = Vec::new();
        for rel in &presentation.relations {
            if rel.is_zero() {
                continue;
            }
            let rdeg = rel
                .homogeneous_degree(gen_degrees)
                .expect("checked in build");
            if rdeg > d {
                continue;
            }
            for mult in Self::monomials_of_degree(gen_degrees, d - rdeg) {
                let mut row = vec![0u8; monomials.len()];
                for m in &rel.monomials {
                    let prod = m.mul(&mult);
                    let idx = mon_index
                        .get(&prod)
                        .expect("product stays within the degree budget");
                    row[*idx] ^= 1;
                }
                span_rows.push(row);
            }
        }

        let (rref, pivots) = if span_rows.is_empty() {
            (F2Matrix::zeros(0, monomials.len()), Vec::new())
        } else {
            F2Matrix::from_rows(&span_rows).rref()
        };

        let basis_cols: Vec<usize> = (0..monomials.len())
            .filter(|c| !pivots.contains(c))
            .collect();
        let mut rewrite = HashMap::new();
        for (row, &pc) in pivots.iter().enumerate() {
            let coords: Vec<u8> = basis_cols.iter().map(|&c| rref.get(row, c)).collect();
            rewrite.insert(pc, coords);
        }
        Ok(DegreeData {
            monomials,
            mon_index,
            basis_cols,
            rewrite,
        })
    }

    pub fn top_degree(&self) -> usize {
        self.presentation.top
    }

    pub fn presentation(&self) -> &RingPresentation {
        &self.presentation
    }

    pub fn gen_names(&self) -> &[String] {
        &self.gen_names
    }

    pub fn gen_degrees(&self) -> &[usize] {
        &self.gen_degrees
    }

    pub fn dim(&self, degree: usize) -> usize {
        if degree > self.presentation.top {
            0
        } else {
            self.degrees[degree].basis_cols.len()
        }
    }

    pub fn dims(&self) -> Vec<usize> {
        (0..=self.presentation.top).map(|d| self.dim(d)).collect()
    }

    /// The basis monomials of a degree, in canonical order.
    pub fn basis(&self, degree: usize) -> Vec<Monomial> {
        if degree > self.presentation.top {
            return Vec::new();
        }
        let data = &self.degrees[degree];
        data.basis_cols
            .iter()
            .map(|&c| data.monomials[c].clone())
            .collect()
    }

    pub fn basis_names(&self, degree: usize) -> Vec<String> {
        self.basis(degree)
            .iter()
            .map(|m| m.render(&self.gen_names))
            .collect()
    }

    pub fn zero_class(&self, degree: usize) -> F2Class {
        F2Class {
            degree,
            coords: vec![0; self.dim(degree)],
        }
    }

    /// The class of a single monomial, reduced to basis form. Monomials
    /// above the truncation degree are zero.
    pub fn monomial_class(&self, m: &Monomial) -> F2Class {
        let degree = m.degree(&self.gen_degrees);
        if degree > self.presentation.top {
            return self.zero_class(degree);
        }
        let data = &self.degrees[degree];
        let idx = *data
            .mon_index
            .get(m)
            .expect("monomial within degree budget");
        let mut coords = vec![0u8; data.basis_cols.len()];
        if let Some(pos) = data.basis_cols.iter().position(|&c| c == idx) {
            coords[pos] = 1;
        } else if let Some(expansion) = data.rewrite.get(&idx) {
            coords.copy_from_slice(expansion);
        }
        F2Class { degree, coords }
    }

    /// Reduces a homogeneous polynomial to a class.
    pub fn class_of_poly(&self, p: &Poly) -> Result<F2Class, RingError> {
        if p.is_zero() {
            return Ok(self.zero_class(0));
        }
        let degree = p
            .homogeneous_degree(&self.gen_degrees)
            .ok_or_else(|| RingError::MixedDegrees(p.render(&self.gen_names)))?;
        let mut acc = self.zero_class(degree);
        for m in &p.monomials {
            acc = self.add(&acc, &self.monomial_class(m));
        }
        Ok(acc)
    }

    /// Parses and reduces a class given in the polynomial text syntax.
    pub fn class(&self, text: &str) -> Result<F2Class, RingError> {
        let poly = parse_poly(text, &self.gen_names).map_err(RingError::Parse)?;
        self.class_of_poly(&poly)
    }

    pub fn add(&self, a: &F2Class, b: &F2Class) -> F2Class {
        assert_eq!(a.degree, b.degree, "sum of classes of different degrees");
        assert_eq!(
            a.coords.len(),
            b.coords.len(),
            "classes from different rings"
        );
        F2Class {
            degree: a.degree,
            coords: a.coords.iter().zip(&b.coords).map(|(x, y)| x ^ y).collect(),
        }
    }

    /// Internal product: truncates to zero above the top degree.
    pub(crate) fn mul_truncating(&self, a: &F2Class, b: &F2Class) -> F2Class {
        let degree = a.degree + b.degree;
        if degree > self.presentation.top || a.is_zero() || b.is_zero() {
            return self.zero_class(degree);
        }
        let basis_a = self.basis(a.degree);
        let basis_b = self.basis(b.degree);
        let mut acc = self.zero_class(degree);
        for (i, ma) in basis_a.iter().enumerate() {
            if a.coords[i] == 0 {
                continue;
            }
            for (j, mb) in basis_b.iter().enumerate() {
                if b.coords[j] == 0 {
                    continue;
                }
                acc = self.add(&acc, &self.monomial_class(&ma.mul(mb)));
            }
        }
        acc
    }

    /// Cup product, reduced to basis form. Errors above the truncation
    /// degree.
    pub fn cup(&self, a: &F2Class, b: &F2Class) -> Result<F2Class, RingError> {
        let degree = a.degree + b.degree;
        if degree > self.presentation.top {
            return Err(RingError::DegreeOverflow {
                degree,
                top: self.presentation.top,
            });
        }
        Ok(self.mul_truncating(a, b))
    }

    pub fn render_class(&self, c: &F2Class) -> String {
        if c.is_zero() {
            return "0".to_string();
        }
        let names = self.basis_names(c.degree);
        let parts: Vec<String> = c
            .coords
            .iter()
            .enumerate()
            .filter(|&(_, &b)| b == 1)
            .map(|(i, _)| names[i].clone())
            .collect();
        parts.join(" + ")
    }

    /// Pairing of a top-degree class against the fundamental class: the
    /// coefficient of the fundamental monomial.
    pub fn pair_with_fundamental(&self, c: &F2Class) -> Result<u8, RingError> {
        let fundamental = self
            .presentation
            .fundamental
            .as_ref()
            .ok_or(RingError::MissingFundamental)?;
        assert_eq!(c.degree, self.presentation.top, "pairing needs a top class");
        let f_class = self.monomial_class(fundamental);
        debug_assert!(!f_class.is_zero(), "fundamental class reduced to zero");
        Ok(c.coords
            .iter()
            .zip(&f_class.coords)
            .fold(0u8, |acc, (a, b)| acc ^ (a & b)))
    }

    /// The pairing matrix `H^k × H^{top-k} → F2`, rows indexed by the
    /// degree-k basis.
    pub fn pairing_matrix(&self, k: usize) -> Result<F2Matrix, RingError> {
        let top = self.presentation.top;
        assert!(k <= top);
        let left = self.basis(k);
        let right = self.basis(top - k);
        let mut m = F2Matrix::zeros(left.len(), right.len());
        for (i, a) in left.iter().enumerate() {
            for (j, b) in right.iter().enumerate() {
                let prod = self.monomial_class(&a.mul(b));
                m.set(i, j, self.pair_with_fundamental(&prod)?);
            }
        }
        Ok(m)
    }

    /// Verifies that Poincaré duality pairing is nonsingular in every
    /// degree. Called at build time when a fundamental class is declared.
    fn check_duality(&self) -> Result<(), RingError> {
        let top = self.presentation.top;
        let fundamental = self.presentation.fundamental.as_ref().unwrap();
        if self.monomial_class(fundamental).is_zero() || self.dim(top) != 1 {
            return Err(RingError::SingularPairing { degree: top });
        }
        for k in 0..=top {
            if self.dim(k) != self.dim(top - k) {
                return Err(RingError::SingularPairing { degree: k });
            }
            let m = self.pairing_matrix(k)?;
            if m.rank() != self.dim(k) {
                return Err(RingError::SingularPairing { degree: k });
            }
        }
        Ok(())
    }

    /// Rebuilds the ring truncated at a lower degree; the fundamental class
    /// is dropped.
    pub fn truncate(&self, new_top: usize) -> Result<Self, RingError> {
        let mut p = self.presentation.clone();
        p.top = new_top;
        p.fundamental = None;
        Self::build(p)
    }
}

/// Parses the presentation text format: lines `gen <name> <degree>`,
/// `rel <poly>`, `sq1 <gen> <poly>`, `top <degree>`,
/// `fundamental <monomial>`. Blank lines and `#` comments are skipped.
pub fn parse_presentation(text: &str) -> Result<RingPresentation, RingError> {
    let mut generators: Vec<(String, usize)> = Vec::new();
    let mut rel_lines: Vec<String> = Vec::new();
    let mut sq1_lines: Vec<(String, String)> = Vec::new();
    let mut top: Option<usize> = None;
    let mut fundamental: Option<String> = None;

    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (keyword, rest) = line
            .split_once(char::is_whitespace)
            .ok_or_else(|| RingError::Parse(format!("malformed line '{line}'")))?;
        let rest = rest.trim();
        match keyword {
            "gen" => {
                let (name, deg) = rest
                    .rsplit_once(char::is_whitespace)
                    .ok_or_else(|| RingError::Parse(format!("malformed gen line '{line}'")))?;
                let degree: usize = deg
                    .trim()
                    .parse()
                    .map_err(|_| RingError::Parse(format!("bad degree in '{line}'")))?;
                generators.push((name.trim().to_string(), degree));
            }
            "rel" => rel_lines.push(rest.to_string()),
            "sq1" => {
                let (gen, poly) = rest
                    .split_once(char::is_whitespace)
                    .ok_or_else(|| RingError::Parse(format!("malformed sq1 line '{line}'")))?;
                sq1_lines.push((gen.trim().to_string(), poly.trim().to_string()));
            }
            "top" => {
                top = Some(
                    rest.parse()
                        .map_err(|_| RingError::Parse(format!("bad top degree '{rest}'")))?,
                );
            }
            "fundamental" => fundamental = Some(rest.to_string()),
            other => return Err(RingError::Parse(format!("unknown keyword '{other}'"))),
        }
    }

    let names: Vec<String> = generators.iter().map(|g| g.0.clone()).collect();
    let relations = rel_lines
        .iter()
        .map(|l| parse_poly(l, &names).map_err(RingError::Parse))
        .collect::<Result<Vec<_>, _>>()?;
    let sq1 = sq1_lines
        .iter()
        .map(|(g, p)| {
            let idx = names
                .iter()
                .position(|n| n == g)
                .ok_or_else(|| RingError::Parse(format!("unknown generator '{g}' in sq1")))?;
            let poly = parse_poly(p, &names).map_err(RingError::Parse)?;
            Ok((idx, poly))
        })
        .collect::<Result<Vec<_>, RingError>>()?;
    let fundamental = fundamental
        .map(|f| parse_monomial(&f, &names).map_err(RingError::Parse))
        .transpose()?;
    Ok(RingPresentation {
        generators,
        relations,
        top: top.ok_or_else(|| RingError::Parse("missing top degree".to_string()))?,
        sq1,
        fundamental,
    })
}
