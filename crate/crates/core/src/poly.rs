//! Sparse multivariate polynomials over a [`Scalar`] coefficient field.
//!
//! Monomials are sorted `(variable, exponent)` lists. They are ordered
//! lexicographically with the smallest variable most significant, so the
//! "greatest" monomial is the one carrying the highest power of the first
//! variable. Terms live in a `BTreeMap`, which keeps every polynomial in a
//! canonical order without any extra sorting step.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// An indeterminate usable in a [`Monomial`].
pub trait Variable: Ord + Clone + Debug {
    /// A formal letter whose product with `self` is the unit.
    fn inverse(&self) -> Option<Self> {
        None
    }

    /// Isobaric weight of the variable.
    fn weight(&self) -> u32 {
        0
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial<V> {
    factors: Vec<(V, u32)>,
}

impl<V: Variable> Monomial<V> {
    pub fn one() -> Self {
        Monomial { factors: Vec::new() }
    }

    pub fn var(v: V) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: V, exp: u32) -> Self {
        if exp == 0 {
            return Self::one();
        }
        Monomial { factors: vec![(v, exp)] }
    }

    /// Builds a monomial from arbitrary factors, merging repeats and
    /// cancelling inverse letters.
    pub fn from_factors<I: IntoIterator<Item = (V, u32)>>(factors: I) -> Self {
        factors
            .into_iter()
            .fold(Self::one(), |acc, (v, e)| acc.mul(&Self::var_pow(v, e)))
    }

    pub fn factors(&self) -> &[(V, u32)] {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn exponent(&self, v: &V) -> u32 {
        self.factors
            .binary_search_by(|(w, _)| w.cmp(v))
            .map(|i| self.factors[i].1)
            .unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|(_, e)| e).sum()
    }

    /// Degree counted only over variables accepted by `filter`.
    pub fn degree_in(&self, filter: impl Fn(&V) -> bool) -> u32 {
        self.factors.iter().filter(|(v, _)| filter(v)).map(|(_, e)| e).sum()
    }

    pub fn weight(&self) -> u32 {
        self.factors.iter().map(|(v, e)| v.weight() * e).sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (mut i, mut j) = (0, 0);
        while i < self.factors.len() && j < other.factors.len() {
            let (a, ea) = &self.factors[i];
            let (b, eb) = &other.factors[j];
            match a.cmp(b) {
                Ordering::Less => {
                    out.push((a.clone(), *ea));
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((b.clone(), *eb));
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a.clone(), ea + eb));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.factors[i..]);
        out.extend_from_slice(&other.factors[j..]);
        let mut m = Monomial { factors: out };
        m.cancel_inverses();
        m
    }

    fn cancel_inverses(&mut self) {
        let pairs: Vec<(V, V)> = self
            .factors
            .iter()
            .filter_map(|(v, _)| v.inverse().map(|w| (v.clone(), w)))
            .filter(|(v, w)| v < w)
            .collect();
        for (v, w) in pairs {
            let (ev, ew) = (self.exponent(&v), self.exponent(&w));
            let common = ev.min(ew);
            if common > 0 {
                for (x, e) in self.factors.iter_mut() {
                    if *x == v || *x == w {
                        *e -= common;
                    }
                }
            }
        }
        self.factors.retain(|(_, e)| *e > 0);
    }

    /// `self / other` when every exponent of `other` fits inside `self`.
    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        let mut out = Vec::with_capacity(self.factors.len());
        let mut j = 0;
        for (v, e) in &self.factors {
            if j < other.factors.len() && other.factors[j].0 < *v {
                return None;
            }
            if j < other.factors.len() && other.factors[j].0 == *v {
                let f = other.factors[j].1;
                j += 1;
                match e.cmp(&f) {
                    Ordering::Less => return None,
                    Ordering::Equal => {}
                    Ordering::Greater => out.push((v.clone(), e - f)),
                }
            } else {
                out.push((v.clone(), *e));
            }
        }
        if j < other.factors.len() {
            return None;
        }
        Some(Monomial { factors: out })
    }

    /// Removes `v` entirely, returning its former exponent.
    pub fn without(&self, v: &V) -> (Self, u32) {
        let exp = self.exponent(v);
        let factors = self.factors.iter().filter(|(w, _)| w != v).cloned().collect();
        (Monomial { factors }, exp)
    }
}

impl<V: Variable> Ord for Monomial<V> {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.factors.iter().zip(&other.factors) {
            match a.0.cmp(&b.0) {
                // `self` has a positive exponent on a more significant variable.
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
                Ordering::Equal => match a.1.cmp(&b.1) {
                    Ordering::Equal => {}
                    ord => return ord,
                },
            }
        }
        self.factors.len().cmp(&other.factors.len())
    }
}

impl<V: Variable> PartialOrd for Monomial<V> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct Polynomial<V, C> {
    terms: BTreeMap<Monomial<V>, C>,
}

impl<V: Variable, C: Scalar> Default for Polynomial<V, C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<V: Variable, C: Scalar> Polynomial<V, C> {
    pub fn zero() -> Self {
        Polynomial { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn var(v: V) -> Self {
        Self::term(C::one(), Monomial::var(v))
    }

    pub fn term(c: C, m: Monomial<V>) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial<V>, C)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial<V>, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = existing.clone() + c;
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial<V>, &C)> {
        self.terms.iter()
    }

    /// Terms from the greatest monomial down; the display order.
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Monomial<V>, &C)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, m: &Monomial<V>) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial<V>, &C)> {
        self.terms.iter().next_back()
    }

    /// The constant term if the polynomial has no other terms.
    pub fn as_constant(&self) -> Option<C> {
        match self.terms.len() {
            0 => Some(C::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    /// Every variable that occurs, ascending.
    pub fn variables(&self) -> Vec<V> {
        let mut vars: Vec<V> = self
            .terms
            .keys()
            .flat_map(|m| m.factors().iter().map(|(v, _)| v.clone()))
            .collect();
        vars.sort();
        vars.dedup();
        vars
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// `Some(d)` when every term has degree `d` under `filter`.
    pub fn homogeneous_degree(&self, filter: impl Fn(&V) -> bool) -> Option<u32> {
        let mut degrees = self.terms.keys().map(|m| m.degree_in(&filter));
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// `Some(w)` when every term has isobaric weight `w`.
    pub fn isobaric_weight(&self) -> Option<u32> {
        let mut weights = self.terms.keys().map(Monomial::weight);
        let first = weights.next()?;
        weights.all(|w| w == first).then_some(first)
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial<V>) -> Self {
        Self::from_terms(self.terms.iter().map(|(n, c)| (n.mul(m), c.clone())))
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Partial derivative with respect to `v`.
    pub fn derivative(&self, v: &V) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let (rest, e) = m.without(v);
            if e == 0 {
                continue;
            }
            let m2 = rest.mul(&Monomial::var_pow(v.clone(), e - 1));
            out.add_term(m2, c.clone() * C::from_u64_exact(e as u64));
        }
        out
    }

    /// Replaces each variable for which `f` returns a polynomial; other
    /// variables are kept as they are.
    pub fn substitute<W, F>(&self, mut f: F) -> Polynomial<W, C>
    where
        W: Variable,
        F: FnMut(&V) -> SubstituteWith<W, C>,
    {
        let mut cache: BTreeMap<V, SubstituteWith<W, C>> = BTreeMap::new();
        let mut out = Polynomial::<W, C>::zero();
        for (m, c) in &self.terms {
            let mut term = Polynomial::<W, C>::constant(c.clone());
            for (v, e) in m.factors() {
                let image = cache.entry(v.clone()).or_insert_with(|| f(v));
                term = match image {
                    SubstituteWith::Poly(p) => &term * &p.pow(*e),
                    SubstituteWith::Var(w) => term.mul_monomial(&Monomial::var_pow(w.clone(), *e)),
                };
                if term.is_zero() {
                    break;
                }
            }
            out = out + term;
        }
        out
    }

    /// Evaluates all variables; fails on the first one `value` leaves unset.
    pub fn evaluate<F>(&self, mut value: F) -> Result<C>
    where
        F: FnMut(&V) -> Option<C>,
    {
        let mut cache: BTreeMap<V, C> = BTreeMap::new();
        let mut total = C::zero();
        for (m, c) in &self.terms {
            let mut acc = c.clone();
            for (v, e) in m.factors() {
                let x = match cache.get(v) {
                    Some(x) => x.clone(),
                    None => {
                        let x = value(v).ok_or_else(|| Error::MissingVariable(format!("{v:?}")))?;
                        cache.insert(v.clone(), x.clone());
                        x
                    }
                };
                for _ in 0..*e {
                    acc = acc * x.clone();
                }
            }
            total = total + acc;
        }
        Ok(total)
    }

    pub fn map_coeffs<D: Scalar>(&self, f: impl Fn(&C) -> D) -> Polynomial<V, D> {
        Polynomial::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    /// Exact quotient by `divisor` (multivariate division in lex order);
    /// `None` when the remainder is nonzero.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (lead_m, lead_c) = divisor.leading_term()?;
        let mut rem = self.clone();
        let mut quotient = Self::zero();
        while let Some((m, c)) = rem.leading_term() {
            let qm = m.checked_div(lead_m)?;
            let qc = c.clone() / lead_c.clone();
            let step = Self::term(qc, qm);
            rem = rem - &step * divisor;
            quotient = quotient + step;
        }
        Some(quotient)
    }
}

/// Image of one variable under [`Polynomial::substitute`].
#[derive(Clone, Debug)]
pub enum SubstituteWith<W, C> {
    Var(W),
    Poly(Polynomial<W, C>),
}

impl<V: Variable> Polynomial<V, BigRational> {
    /// Positive-content primitive form: integer coefficients with gcd 1 and
    /// a positive leading (greatest) coefficient. Returns the scalar `s`
    /// with `self = s * primitive`.
    pub fn primitive_part(&self) -> (BigRational, Self) {
        let Some((_, lead)) = self.leading_term() else {
            return (BigRational::one(), Self::zero());
        };
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut content = BigRational::new(num_gcd, den_lcm);
        if lead.is_negative() {
            content = -content;
        }
        let inv = content.recip();
        (content, self.scale(&inv))
    }
}

impl<'a, V: Variable, C: Scalar> Add<&'a Polynomial<V, C>> for &'a Polynomial<V, C> {
    type Output = Polynomial<V, C>;
    fn add(self, rhs: &'a Polynomial<V, C>) -> Polynomial<V, C> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<V: Variable, C: Scalar> Add for Polynomial<V, C> {
    type Output = Polynomial<V, C>;
    fn add(mut self, rhs: Polynomial<V, C>) -> Polynomial<V, C> {
        if self.terms.len() < rhs.terms.len() {
            return rhs + self;
        }
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl<V: Variable, C: Scalar> Neg for Polynomial<V, C> {
    type Output = Polynomial<V, C>;
    fn neg(mut self) -> Polynomial<V, C> {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl<V: Variable, C: Scalar> Neg for &Polynomial<V, C> {
    type Output = Polynomial<V, C>;
    fn neg(self) -> Polynomial<V, C> {
        -self.clone()
    }
}

impl<'a, V: Variable, C: Scalar> Sub<&'a Polynomial<V, C>> for &'a Polynomial<V, C> {
    type Output = Polynomial<V, C>;
    fn sub(self, rhs: &'a Polynomial<V, C>) -> Polynomial<V, C> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<V: Variable, C: Scalar> Sub for Polynomial<V, C> {
    type Output = Polynomial<V, C>;
    fn sub(self, rhs: Polynomial<V, C>) -> Polynomial<V, C> {
        &self - &rhs
    }
}

impl<'a, V: Variable, C: Scalar> Mul<&'a Polynomial<V, C>> for &'a Polynomial<V, C> {
    type Output = Polynomial<V, C>;
    fn mul(self, rhs: &'a Polynomial<V, C>) -> Polynomial<V, C> {
        let mut out = Polynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<V: Variable, C: Scalar> Mul for Polynomial<V, C> {
    type Output = Polynomial<V, C>;
    fn mul(self, rhs: Polynomial<V, C>) -> Polynomial<V, C> {
        &self * &rhs
    }
}
