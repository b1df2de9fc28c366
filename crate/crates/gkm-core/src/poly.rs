//! Multivariate polynomials with exact rational coefficients.
//!
//! Polynomials are stored sparsely (monomial -> coefficient); per-degree
//! coefficient vectors are laid out densely over [`monomial_basis`], whose
//! lexicographic order is fixed once so that vector layouts are
//! reproducible everywhere (solvers, serialization, fixtures).

use std::collections::BTreeMap;
use std::fmt;

use num::Zero;
use thiserror::Error;

use crate::linalg::LinearMap;
use crate::rat::{rat, Rat};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("shape mismatch: {0}")]
    Shape(String),
}

/// Exponent vector, one entry per variable of the ambient tuple.
///
/// The ordering is lexicographic on exponents, *descending*, so that for
/// two variables the degree-2 basis reads `t1^2, t1*t2, t2^2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial { exponents }
    }

    pub fn constant(nvars: usize) -> Self {
        Monomial {
            exponents: vec![0; nvars],
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    pub fn nvars(&self) -> usize {
        self.exponents.len()
    }
}

/// All monomials of total degree `d` in `nvars` variables, lexicographic
/// (highest power of the first variable first). Length is
/// `C(d + nvars - 1, nvars - 1)`; for zero variables the list is `[1]` in
/// degree 0 and empty otherwise.
pub fn monomial_basis(nvars: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut current = vec![0u32; nvars];
    fill_basis(&mut out, &mut current, 0, d);
    out
}

fn fill_basis(out: &mut Vec<Monomial>, current: &mut Vec<u32>, pos: usize, remaining: u32) {
    if pos == current.len() {
        if remaining == 0 {
            out.push(Monomial::new(current.clone()));
        }
        return;
    }
    if pos == current.len() - 1 {
        current[pos] = remaining;
        out.push(Monomial::new(current.clone()));
        current[pos] = 0;
        return;
    }
    for e in (0..=remaining).rev() {
        current[pos] = e;
        fill_basis(out, current, pos + 1, remaining - e);
    }
    current[pos] = 0;
}

/// Sparse polynomial over a fixed variable tuple. Zero coefficients are
/// never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Rat>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        let mut p = Polynomial::zero(nvars);
        p.add_term(Monomial::constant(nvars), c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Polynomial::constant(nvars, rat(1))
    }

    /// The variable `t_{i+1}` as a polynomial.
    pub fn variable(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index out of range");
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        let mut p = Polynomial::zero(nvars);
        p.add_term(Monomial::new(exps), rat(1));
        p
    }

    /// Linear form `sum coeffs[i] * t_{i+1}`.
    pub fn linear_form(coeffs: &[Rat]) -> Self {
        let mut p = Polynomial::zero(coeffs.len());
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                let mut exps = vec![0; coeffs.len()];
                exps[i] = 1;
                p.add_term(Monomial::new(exps), c.clone());
            }
        }
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Rat)>) -> Self {
        let mut p = Polynomial::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "monomial arity mismatch");
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(|| rat(0))
    }

    fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "arity mismatch");
        let mut out = self.clone();
        for (m, c) in rhs.terms() {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Polynomial) -> Polynomial {
        self.add(&rhs.scale(&rat(-1)))
    }

    pub fn scale(&self, c: &Rat) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        let mut out = Polynomial::zero(self.nvars);
        for (m, k) in self.terms() {
            out.terms.insert(m.clone(), k * c);
        }
        out
    }

    pub fn mul(&self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, rhs.nvars, "arity mismatch");
        let mut out = Polynomial::zero(self.nvars);
        for (ma, ca) in self.terms() {
            for (mb, cb) in rhs.terms() {
                let exps: Vec<u32> = ma
                    .exponents
                    .iter()
                    .zip(&mb.exponents)
                    .map(|(a, b)| a + b)
                    .collect();
                out.add_term(Monomial::new(exps), ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut out = Polynomial::one(self.nvars);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Total degree of the highest term, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    /// `Some(d)` when every stored monomial has total degree `d`.
    /// The zero polynomial is homogeneous of every degree.
    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.total_degree() == d)
    }

    /// Dense coefficient vector over `monomial_basis(self.nvars, d)`.
    /// Panics if a stored monomial has a different total degree.
    pub fn coefficient_vector(&self, d: u32) -> Vec<Rat> {
        let basis = monomial_basis(self.nvars, d);
        let index: BTreeMap<&Monomial, usize> =
            basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut out = vec![rat(0); basis.len()];
        for (m, c) in self.terms() {
            let i = *index.get(m).unwrap_or_else(|| {
                panic!(
                    "monomial of degree {} in degree-{} vector",
                    m.total_degree(),
                    d
                )
            });
            out[i] = c.clone();
        }
        out
    }

    /// Inverse of [`Polynomial::coefficient_vector`].
    pub fn from_coefficient_vector(nvars: usize, d: u32, coeffs: &[Rat]) -> Polynomial {
        let basis = monomial_basis(nvars, d);
        assert_eq!(
            basis.len(),
            coeffs.len(),
            "coefficient vector length mismatch"
        );
        Polynomial::from_terms(nvars, basis.into_iter().zip(coeffs.iter().cloned()))
    }

    /// Composition `f ∘ L`: substitutes variable `i` of `f` by the `i`-th
    /// coordinate of `L` applied to the `L.cols()` new variables. Preserves
    /// homogeneous degree (or yields zero).
    pub fn pullback(&self, map: &LinearMap) -> Result<Polynomial, PolyError> {
        if self.nvars != map.rows() {
            return Err(PolyError::Shape(format!(
                "pullback of a {}-variable polynomial along a {}x{} map",
                self.nvars,
                map.rows(),
                map.cols()
            )));
        }
        let target_vars = map.cols();
        // Linear form for each source variable, then cached powers.
        let forms: Vec<Polynomial> = (0..self.nvars)
            .map(|i| Polynomial::linear_form(map.row(i)))
            .collect();
        let mut powers: Vec<Vec<Polynomial>> = forms
            .iter()
            .map(|f| vec![Polynomial::one(target_vars), f.clone()])
            .collect();
        let mut out = Polynomial::zero(target_vars);
        for (m, c) in self.terms() {
            let mut term = Polynomial::constant(target_vars, c.clone());
            for (i, &e) in m.exponents.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul(&forms[i]);
                    powers[i].push(next);
                }
                term = term.mul(&powers[i][e as usize]);
            }
            out = out.add(&term);
        }
        Ok(out)
    }

    /// Exact division by a nonzero linear form; `None` when not divisible.
    ///
    /// Divides out the last variable with nonzero coefficient in `form`,
    /// treating the others as parameters, and checks the remainder.
    pub fn divide_by_linear(&self, form: &Polynomial) -> Option<Polynomial> {
        assert_eq!(self.nvars, form.nvars(), "arity mismatch");
        assert!(
            form.is_homogeneous_of(1) && !form.is_zero(),
            "divisor must be a nonzero linear form"
        );
        // Pivot variable: the last one appearing in the form.
        let (pivot, pivot_coeff) = form
            .terms()
            .map(|(m, c)| {
                let var = m.exponents.iter().position(|&e| e == 1).unwrap();
                (var, c.clone())
            })
            .max_by_key(|(var, _)| *var)
            .unwrap();
        let mut remainder = self.clone();
        let mut quotient = Polynomial::zero(self.nvars);
        // Repeatedly cancel the term with the highest pivot exponent.
        loop {
            let lead = remainder
                .terms()
                .filter(|(m, _)| m.exponents[pivot] > 0)
                .map(|(m, c)| (m.clone(), c.clone()))
                .max_by_key(|(m, _)| m.exponents[pivot]);
            let (m, c) = match lead {
                Some(t) => t,
                None => break,
            };
            let mut qexps = m.exponents.clone();
            qexps[pivot] -= 1;
            let qcoeff = &c / &pivot_coeff;
            let qterm = Polynomial::from_terms(self.nvars, [(Monomial::new(qexps), qcoeff)]);
            quotient = quotient.add(&qterm);
            remainder = remainder.sub(&qterm.mul(form));
        }
        // What is left has pivot exponent 0 everywhere; divisibility means
        // it must vanish (the form genuinely involves the pivot).
        if remainder.is_zero() {
            Some(quotient)
        } else {
            None
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms() {
            let mut mono = String::new();
            for (i, &e) in m.exponents.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !mono.is_empty() {
                    mono.push('*');
                }
                mono.push_str(&format!("t{}", i + 1));
                if e > 1 {
                    mono.push_str(&format!("^{}", e));
                }
            }
            let c_str = crate::rat::format_rat(c);
            let (sign, abs) = match c_str.strip_prefix('-') {
                Some(rest) => ("-", rest.to_string()),
                None => ("+", c_str),
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            if mono.is_empty() {
                write!(f, "{}", abs)?;
            } else if abs == "1" {
                write!(f, "{}", mono)?;
            } else {
                write!(f, "{}*{}", abs, mono)?;
            }
        }
        Ok(())
    }
}

/// A degree-`d` slice of a graded algebra: a linearly independent list of
/// homogeneous polynomials of that degree.
#[derive(Debug, Clone)]
pub struct GradedSubspace {
    pub degree: u32,
    pub nvars: usize,
    pub basis: Vec<Polynomial>,
}

impl GradedSubspace {
    /// Checks homogeneity and linear independence.
    pub fn new(degree: u32, nvars: usize, basis: Vec<Polynomial>) -> Result<Self, PolyError> {
        for b in &basis {
            if b.nvars() != nvars {
                return Err(PolyError::Shape("basis arity mismatch".into()));
            }
            if b.is_zero() || !b.is_homogeneous_of(degree) {
                return Err(PolyError::Shape(format!(
                    "basis element not homogeneous nonzero of degree {}",
                    degree
                )));
            }
        }
        let rows: Vec<Vec<Rat>> = basis.iter().map(|b| b.coefficient_vector(degree)).collect();
        if crate::linalg::rank(&rows) != basis.len() {
            return Err(PolyError::Shape("basis not linearly independent".into()));
        }
        Ok(GradedSubspace {
            degree,
            nvars,
            basis,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}
