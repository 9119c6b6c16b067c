use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{CommutativeRing, ExactRational};
use crate::error::{Error, Result};

/// A dense exponent vector, one entry per variable of the owning context.
///
/// Ordered graded-lexicographically: total degree first, then exponents
/// compared left to right.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Self(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Self(vec![0; nvars])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn times(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Outcome of a weighted-homogeneity check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightedDegree {
    /// The zero polynomial, homogeneous of every degree.
    Zero,
    Homogeneous(u32),
    Inhomogeneous,
}

impl WeightedDegree {
    /// True when the polynomial is homogeneous of degree `d` (vacuously for zero).
    pub fn is(&self, d: u32) -> bool {
        match self {
            WeightedDegree::Zero => true,
            WeightedDegree::Homogeneous(e) => *e == d,
            WeightedDegree::Inhomogeneous => false,
        }
    }
}

/// A sparse multivariate polynomial with exact rational coefficients.
///
/// Each value carries its own ordered variable context. Arithmetic between
/// values with different contexts extends both to the union of the two
/// contexts (left operand's variables first), so mismatched contexts are
/// always reconciled. Equality compares the polynomials, not the contexts:
/// `v + w` in context `[v, w]` equals `w + v` in context `[w, v, e]`.
#[derive(Clone)]
pub struct SparsePolynomial {
    vars: Vec<String>,
    terms: BTreeMap<Monomial, ExactRational>,
}

fn union_vars(a: &[String], b: &[String]) -> Vec<String> {
    let mut out = a.to_vec();
    for v in b {
        if !out.contains(v) {
            out.push(v.clone());
        }
    }
    out
}

impl SparsePolynomial {
    pub fn zero() -> Self {
        Self::zero_in::<&str>(&[])
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// The zero polynomial in the given context.
    pub fn zero_in<S: AsRef<str>>(vars: &[S]) -> Self {
        Self {
            vars: vars.iter().map(|v| v.as_ref().to_string()).collect(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: impl Into<ExactRational>) -> Self {
        Self::constant_in::<&str>(&[], c)
    }

    pub fn constant_in<S: AsRef<str>>(vars: &[S], c: impl Into<ExactRational>) -> Self {
        let mut p = Self::zero_in(vars);
        let c = c.into();
        if !c.is_zero() {
            p.terms.insert(Monomial::one(p.vars.len()), c);
        }
        p
    }

    /// The single variable `name` in a one-variable context.
    pub fn var(name: &str) -> Self {
        Self::var_in(&[name], name).expect("variable is in its own context")
    }

    /// The variable `name` inside the context `vars`.
    pub fn var_in<S: AsRef<str>>(vars: &[S], name: &str) -> Result<Self> {
        let mut p = Self::zero_in(vars);
        let idx = p.index_of(name).ok_or_else(|| Error::ContextMismatch {
            var: name.to_string(),
            context: p.vars.clone(),
        })?;
        let mut e = vec![0; p.vars.len()];
        e[idx] = 1;
        p.terms.insert(Monomial(e), ExactRational::one());
        Ok(p)
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs; repeated
    /// exponent vectors are summed and zero sums dropped.
    pub fn from_terms<S, I>(vars: &[S], terms: I) -> Result<Self>
    where
        S: AsRef<str>,
        I: IntoIterator<Item = (Vec<u32>, ExactRational)>,
    {
        let mut p = Self::zero_in(vars);
        for (exps, c) in terms {
            if exps.len() != p.vars.len() {
                return Err(Error::Internal(format!(
                    "exponent vector of length {} in a context of {} variables",
                    exps.len(),
                    p.vars.len()
                )));
            }
            p.add_term(Monomial(exps), c);
        }
        Ok(p)
    }

    pub fn variables(&self) -> &[String] {
        &self.vars
    }

    /// Terms in ascending graded-lexicographic order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &ExactRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.total_degree() == 0)
    }

    pub fn constant_term(&self) -> ExactRational {
        self.terms
            .get(&Monomial::one(self.vars.len()))
            .cloned()
            .unwrap_or_default()
    }

    /// The coefficient of the monomial given as `(variable, exponent)` pairs.
    pub fn coefficient(&self, monomial: &[(&str, u32)]) -> ExactRational {
        let mut e = vec![0; self.vars.len()];
        for (name, k) in monomial {
            match self.index_of(name) {
                Some(i) => e[i] += k,
                None if *k == 0 => {}
                None => return ExactRational::zero(),
            }
        }
        self.terms.get(&Monomial(e)).cloned().unwrap_or_default()
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(ExactRational::is_integer)
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Variables that occur with a nonzero exponent in some term.
    pub fn used_variables(&self) -> Vec<String> {
        self.vars
            .iter()
            .enumerate()
            .filter(|(i, _)| self.terms.keys().any(|m| m.0[*i] > 0))
            .map(|(_, v)| v.clone())
            .collect()
    }

    pub fn degree_in(&self, name: &str) -> u32 {
        match self.index_of(name) {
            Some(i) => self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0),
            None => 0,
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(Monomial::total_degree)
            .max()
            .unwrap_or(0)
    }

    fn add_term(&mut self, m: Monomial, c: ExactRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// Re-expresses the polynomial in the context `vars`.
    ///
    /// Fails if a variable that actually occurs is missing from `vars`;
    /// unused variables may be dropped.
    pub fn with_context<S: AsRef<str>>(&self, vars: &[S]) -> Result<Self> {
        let target: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        if target == self.vars {
            return Ok(self.clone());
        }
        let mut map = Vec::with_capacity(self.vars.len());
        for (i, v) in self.vars.iter().enumerate() {
            let pos = target.iter().position(|t| t == v);
            if pos.is_none() && self.terms.keys().any(|m| m.0[i] > 0) {
                return Err(Error::ContextMismatch {
                    var: v.clone(),
                    context: target,
                });
            }
            map.push(pos);
        }
        let mut out = Self::zero_in(&target);
        for (m, c) in &self.terms {
            let mut e = vec![0; target.len()];
            for (i, pos) in map.iter().enumerate() {
                if let Some(p) = pos {
                    e[*p] = m.0[i];
                }
            }
            out.terms.insert(Monomial(e), c.clone());
        }
        Ok(out)
    }

    /// Brings two polynomials into a shared context.
    fn aligned(&self, other: &Self) -> (Self, Self) {
        let vars = union_vars(&self.vars, &other.vars);
        let a = self
            .with_context(&vars)
            .expect("union contains all variables");
        let b = other
            .with_context(&vars)
            .expect("union contains all variables");
        (a, b)
    }

    pub fn add_poly(&self, other: &Self) -> Self {
        if self.vars != other.vars {
            let (a, b) = self.aligned(other);
            return a.add_poly(&b);
        }
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub_poly(&self, other: &Self) -> Self {
        self.add_poly(&other.neg_poly())
    }

    pub fn mul_poly(&self, other: &Self) -> Self {
        if self.vars != other.vars {
            let (a, b) = self.aligned(other);
            return a.mul_poly(&b);
        }
        let mut out = Self::zero_in(&self.vars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.times(mb), ca * cb);
            }
        }
        out
    }

    pub fn neg_poly(&self) -> Self {
        self.scale_by(&ExactRational::from(-1))
    }

    pub fn scale_by(&self, c: &ExactRational) -> Self {
        if c.is_zero() {
            return Self::zero_in(&self.vars);
        }
        Self {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn pow_poly(&self, exp: u32) -> Self {
        let mut acc = Self::constant_in(&self.vars, 1);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_poly(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_poly(&base);
            }
        }
        acc
    }

    /// Applies a coefficient-wise map, dropping zeros.
    pub fn map_coefficients(&self, f: impl Fn(&ExactRational) -> ExactRational) -> Self {
        let mut out = Self::zero_in(&self.vars);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    /// Ring-homomorphism image under `var -> image`; unmapped variables map
    /// to themselves.
    ///
    /// The result lives in the union of the image contexts, taken in the
    /// order of this polynomial's variables.
    pub fn substitute(&self, map: &[(&str, SparsePolynomial)]) -> Result<Self> {
        let images: Vec<SparsePolynomial> = self
            .vars
            .iter()
            .map(|v| {
                map.iter()
                    .find(|(name, _)| name == v)
                    .map(|(_, p)| p.clone())
                    .unwrap_or_else(|| SparsePolynomial::var(v))
            })
            .collect();
        let mut target: Vec<String> = Vec::new();
        for img in &images {
            target = union_vars(&target, &img.vars);
        }
        let images = images
            .iter()
            .map(|p| p.with_context(&target))
            .collect::<Result<Vec<_>>>()?;
        let zero = Self::zero_in(&target);
        self.evaluate_with(&images, zero)
    }

    /// Evaluates the polynomial in an arbitrary commutative ring, looking up
    /// the value of each used variable by name.
    pub fn evaluate_in<R: CommutativeRing>(&self, lookup: impl Fn(&str) -> Option<R>) -> Result<R> {
        let mut values = Vec::with_capacity(self.vars.len());
        for (i, v) in self.vars.iter().enumerate() {
            let used = self.terms.keys().any(|m| m.0[i] > 0);
            match lookup(v) {
                Some(x) => values.push(x),
                None if !used => values.push(R::zero()),
                None => return Err(Error::UnassignedVariable(v.clone())),
            }
        }
        self.evaluate_with(&values, R::zero())
    }

    fn evaluate_with<R: CommutativeRing>(&self, values: &[R], zero: R) -> Result<R> {
        // Cached powers of each value, built lazily up to the maximal exponent.
        let mut powers: Vec<Vec<R>> = Vec::with_capacity(values.len());
        for (i, x) in values.iter().enumerate() {
            let max = self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0);
            let mut p = Vec::with_capacity(max as usize + 1);
            p.push(R::one());
            for k in 1..=max as usize {
                let next = p[k - 1].mul(x);
                p.push(next);
            }
            powers.push(p);
        }
        let mut acc = zero;
        for (m, c) in &self.terms {
            let mut t = R::from_rational(c);
            for (i, e) in m.0.iter().enumerate() {
                if *e > 0 {
                    t = t.mul(&powers[i][*e as usize]);
                }
            }
            acc = acc.add(&t);
        }
        Ok(acc)
    }

    /// Exact evaluation at a rational point.
    pub fn evaluate(&self, point: &[(&str, ExactRational)]) -> Result<ExactRational> {
        self.evaluate_in(|name| {
            point
                .iter()
                .find(|(v, _)| *v == name)
                .map(|(_, x)| x.clone())
        })
    }

    /// The polynomial multiplying `name^k`, as a polynomial in the remaining
    /// variables (the context loses `name`).
    pub fn coefficient_of(&self, name: &str, k: u32) -> Self {
        let Some(idx) = self.index_of(name) else {
            return if k == 0 {
                self.clone()
            } else {
                Self::zero_in(&self.vars)
            };
        };
        let vars: Vec<String> = self
            .vars
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != idx)
            .map(|(_, v)| v.clone())
            .collect();
        let mut out = Self::zero_in(&vars);
        for (m, c) in &self.terms {
            if m.0[idx] == k {
                let mut e = m.0.clone();
                e.remove(idx);
                out.terms.insert(Monomial(e), c.clone());
            }
        }
        out
    }

    /// Long division by `divisor` viewed as univariate in `name` with
    /// polynomial coefficients. The divisor must be monic in `name`.
    ///
    /// Returns `(quotient, remainder)` with `self = quotient * divisor +
    /// remainder` and `deg_name(remainder) < deg_name(divisor)`.
    pub fn divrem_in_variable(&self, divisor: &Self, name: &str) -> Result<(Self, Self)> {
        if divisor.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        let mut vars = union_vars(&self.vars, &divisor.vars);
        if !vars.iter().any(|v| v == name) {
            vars.push(name.to_string());
        }
        let p = self.with_context(&vars)?;
        let div = divisor.with_context(&vars)?;
        let idx = vars.iter().position(|v| v == name).expect("pushed above");

        let n = div.degree_in(name);
        let lead = div.leading_part(idx, n);
        let mut one = vec![0; vars.len()];
        one[idx] = n;
        if lead.terms.len() != 1 || lead.terms.get(&Monomial(one)).map(|c| c.is_one()) != Some(true)
        {
            return Err(Error::NotMonic(name.to_string()));
        }

        let mut quotient = Self::zero_in(&vars);
        let mut rem = p;
        loop {
            let deg = rem.degree_in(name);
            if rem.is_zero() || deg < n {
                break;
            }
            let mut step = Self::zero_in(&vars);
            for (m, c) in rem.terms.iter().filter(|(m, _)| m.0[idx] == deg) {
                let mut e = m.0.clone();
                e[idx] -= n;
                step.terms.insert(Monomial(e), c.clone());
            }
            rem = rem.sub_poly(&step.mul_poly(&div));
            quotient = quotient.add_poly(&step);
        }
        Ok((quotient, rem))
    }

    fn leading_part(&self, idx: usize, deg: u32) -> Self {
        let mut out = Self::zero_in(&self.vars);
        for (m, c) in self.terms.iter().filter(|(m, _)| m.0[idx] == deg) {
            out.terms.insert(m.clone(), c.clone());
        }
        out
    }

    /// Weighted degree under `weights`; only variables that occur need a weight.
    pub fn weighted_degree(&self, weights: &[(&str, u32)]) -> Result<WeightedDegree> {
        if self.is_zero() {
            return Ok(WeightedDegree::Zero);
        }
        let mut w = Vec::with_capacity(self.vars.len());
        for (i, v) in self.vars.iter().enumerate() {
            let used = self.terms.keys().any(|m| m.0[i] > 0);
            match weights.iter().find(|(name, _)| name == v) {
                Some((_, x)) => w.push(*x),
                None if !used => w.push(0),
                None => return Err(Error::MissingWeight(v.clone())),
            }
        }
        let mut degrees = self
            .terms
            .keys()
            .map(|m| m.0.iter().zip(&w).map(|(e, x)| e * x).sum::<u32>());
        let first = degrees.next().expect("nonzero polynomial");
        if degrees.all(|d| d == first) {
            Ok(WeightedDegree::Homogeneous(first))
        } else {
            Ok(WeightedDegree::Inhomogeneous)
        }
    }

    fn named_terms(&self) -> BTreeMap<Vec<(&str, u32)>, &ExactRational> {
        self.terms
            .iter()
            .map(|(m, c)| {
                let mut key: Vec<(&str, u32)> = self
                    .vars
                    .iter()
                    .zip(&m.0)
                    .filter(|(_, e)| **e > 0)
                    .map(|(v, e)| (v.as_str(), *e))
                    .collect();
                key.sort();
                (key, c)
            })
            .collect()
    }
}

impl PartialEq for SparsePolynomial {
    fn eq(&self, other: &Self) -> bool {
        if self.vars == other.vars {
            self.terms == other.terms
        } else {
            self.named_terms() == other.named_terms()
        }
    }
}

impl Eq for SparsePolynomial {}

impl fmt::Display for SparsePolynomial {
    /// Canonical form: terms in descending graded-lexicographic order,
    /// coefficients as `num/den`, e.g. `3*m^2 - 6*m + 3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            let factors: Vec<String> = self
                .vars
                .iter()
                .zip(&m.0)
                .filter(|(_, e)| **e > 0)
                .map(|(v, e)| {
                    if *e == 1 {
                        v.clone()
                    } else {
                        format!("{v}^{e}")
                    }
                })
                .collect();
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{abs}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {:?}", self, self.vars)
    }
}

impl CommutativeRing for SparsePolynomial {
    fn zero() -> Self {
        SparsePolynomial::zero()
    }
    fn one() -> Self {
        SparsePolynomial::one()
    }
    fn add(&self, other: &Self) -> Self {
        self.add_poly(other)
    }
    fn mul(&self, other: &Self) -> Self {
        self.mul_poly(other)
    }
    fn scale(&self, c: &ExactRational) -> Self {
        self.scale_by(c)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn pow(&self, exp: u32) -> Self {
        self.pow_poly(exp)
    }
}

macro_rules! poly_binop {
    ($tr:ident, $m:ident, $imp:ident) => {
        impl $tr<&SparsePolynomial> for &SparsePolynomial {
            type Output = SparsePolynomial;
            fn $m(self, rhs: &SparsePolynomial) -> SparsePolynomial {
                self.$imp(rhs)
            }
        }
        impl $tr for SparsePolynomial {
            type Output = SparsePolynomial;
            fn $m(self, rhs: SparsePolynomial) -> SparsePolynomial {
                self.$imp(&rhs)
            }
        }
        impl $tr<&SparsePolynomial> for SparsePolynomial {
            type Output = SparsePolynomial;
            fn $m(self, rhs: &SparsePolynomial) -> SparsePolynomial {
                self.$imp(rhs)
            }
        }
    };
}
poly_binop!(Add, add, add_poly);
poly_binop!(Sub, sub, sub_poly);
poly_binop!(Mul, mul, mul_poly);

impl Neg for SparsePolynomial {
    type Output = SparsePolynomial;
    fn neg(self) -> SparsePolynomial {
        self.neg_poly()
    }
}

impl Neg for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn neg(self) -> SparsePolynomial {
        self.neg_poly()
    }
}
