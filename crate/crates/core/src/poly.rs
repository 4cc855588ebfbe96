//! Sparse multivariate polynomials with exact integer coefficients.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A polynomial over named indeterminates.
///
/// Exponent vectors are indexed by `vars`. Zero coefficients are never
/// stored. Equality is semantic: two polynomials over different variable
/// lists are equal when they agree after dropping unused variables.
#[derive(Clone)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl MultiPoly {
    pub fn zero<S: Into<String>>(vars: impl IntoIterator<Item = S>) -> Self {
        MultiPoly {
            vars: vars.into_iter().map(Into::into).collect(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant<S: Into<String>>(
        vars: impl IntoIterator<Item = S>,
        c: impl Into<BigInt>,
    ) -> Self {
        let mut p = Self::zero(vars);
        let n = p.vars.len();
        p.add_term(vec![0; n], c.into());
        p
    }

    pub fn one<S: Into<String>>(vars: impl IntoIterator<Item = S>) -> Self {
        Self::constant(vars, 1)
    }

    /// The polynomial `name`, over `vars` (which must contain it).
    pub fn var<S: Into<String>>(vars: impl IntoIterator<Item = S>, name: &str) -> Result<Self> {
        let mut p = Self::zero(vars);
        let i = p
            .var_index(name)
            .ok_or_else(|| Error::UnknownLabel(name.to_string()))?;
        let mut e = vec![0; p.vars.len()];
        e[i] = 1;
        p.add_term(e, BigInt::one());
        Ok(p)
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Adds `coef * x^exps` in place.
    pub fn add_term(&mut self, exps: Vec<u32>, coef: BigInt) {
        assert_eq!(exps.len(), self.vars.len(), "exponent vector length");
        if coef.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coef);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coef;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Coefficient of `x^exps` (zero when absent).
    pub fn coefficient(&self, exps: &[u32]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    /// Coefficient of the monomial given as `(variable, exponent)` pairs.
    /// Variables not mentioned have exponent zero.
    pub fn coefficient_of(&self, monomial: &[(&str, u32)]) -> BigInt {
        let mut e = vec![0; self.vars.len()];
        for &(name, k) in monomial {
            match self.var_index(name) {
                Some(i) => e[i] = k,
                None if k == 0 => {}
                None => return BigInt::zero(),
            }
        }
        self.coefficient(&e)
    }

    /// Terms in canonical order: exponent vectors descending
    /// lexicographically in the variable order.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter().rev()
    }

    /// The same polynomial over `vars`, which must include every variable
    /// that occurs with a positive exponent.
    pub fn with_vars<S: AsRef<str>>(&self, vars: &[S]) -> Result<Self> {
        let map: Vec<Option<usize>> = self
            .vars
            .iter()
            .map(|v| vars.iter().position(|w| w.as_ref() == v))
            .collect();
        let mut out = Self::zero(vars.iter().map(|v| v.as_ref().to_string()));
        for (e, c) in &self.terms {
            let mut ne = vec![0; vars.len()];
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let j = map[i].ok_or_else(|| Error::UnknownLabel(self.vars[i].clone()))?;
                ne[j] = k;
            }
            out.add_term(ne, c.clone());
        }
        Ok(out)
    }

    /// Variables of `self` followed by those of `other` not already present.
    fn union_vars(&self, other: &Self) -> Vec<String> {
        let mut vars = self.vars.clone();
        for v in &other.vars {
            if !vars.contains(v) {
                vars.push(v.clone());
            }
        }
        vars
    }

    fn aligned(&self, other: &Self) -> (Self, Self) {
        if self.vars == other.vars {
            return (self.clone(), other.clone());
        }
        let vars = self.union_vars(other);
        (
            self.with_vars(&vars).expect("union covers all variables"),
            other.with_vars(&vars).expect("union covers all variables"),
        )
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.vars.clone());
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc
    }

    /// Replaces each bound variable with a polynomial. The result's
    /// variables are the unbound variables of `self` followed by the
    /// variables of the bindings, in first-seen order.
    pub fn substitute(&self, bindings: &HashMap<String, MultiPoly>) -> Self {
        let mut vars: Vec<String> = self
            .vars
            .iter()
            .filter(|v| !bindings.contains_key(*v))
            .cloned()
            .collect();
        for v in &self.vars {
            if let Some(b) = bindings.get(v) {
                for w in &b.vars {
                    if !vars.contains(w) {
                        vars.push(w.clone());
                    }
                }
            }
        }
        let images: Vec<MultiPoly> = self
            .vars
            .iter()
            .map(|v| match bindings.get(v) {
                Some(b) => b
                    .with_vars(&vars)
                    .expect("all binding variables are present"),
                None => Self::var(vars.clone(), v).expect("unbound variable is kept"),
            })
            .collect();
        // cache powers per variable
        let mut powers: Vec<Vec<MultiPoly>> = images
            .iter()
            .map(|p| vec![Self::one(vars.clone()), p.clone()])
            .collect();
        let mut out = Self::zero(vars.clone());
        for (e, c) in &self.terms {
            let mut t = Self::constant(vars.clone(), c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                while powers[i].len() <= k as usize {
                    let next = powers[i].last().unwrap() * &images[i];
                    powers[i].push(next);
                }
                t = &t * &powers[i][k as usize];
            }
            out = &out + &t;
        }
        out
    }

    /// Exact value at a point. Every variable that occurs must be bound.
    pub fn evaluate(&self, point: &HashMap<String, BigInt>) -> Result<BigInt> {
        let vals: Vec<Option<&BigInt>> = self.vars.iter().map(|v| point.get(v)).collect();
        let mut sum = BigInt::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let x = vals[i].ok_or_else(|| Error::UnboundVariable(self.vars[i].clone()))?;
                t *= num_traits::pow(x.clone(), k as usize);
            }
            sum += t;
        }
        Ok(sum)
    }

    /// Variable-name keyed form with unused variables dropped.
    fn normal_form(&self) -> BTreeMap<Vec<(&str, u32)>, &BigInt> {
        self.terms
            .iter()
            .map(|(e, c)| {
                let mut m: Vec<(&str, u32)> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(i, &k)| (self.vars[i].as_str(), k))
                    .collect();
                m.sort();
                (m, c)
            })
            .collect()
    }

    pub fn to_json_value(&self) -> PolyJson {
        PolyJson {
            vars: self.vars.clone(),
            terms: self
                .terms()
                .map(|(e, c)| TermJson {
                    exps: e.clone(),
                    coef: c.to_string(),
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("polynomial serialises")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: PolyJson = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
        Self::try_from(raw)
    }
}

/// JSON schema: `{"vars": [...], "terms": [{"exps": [...], "coef": "..."}]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exps: Vec<u32>,
    pub coef: String,
}

impl TryFrom<PolyJson> for MultiPoly {
    type Error = Error;

    fn try_from(raw: PolyJson) -> Result<Self> {
        let mut p = MultiPoly::zero(raw.vars);
        for t in raw.terms {
            if t.exps.len() != p.vars.len() {
                return Err(Error::Format("exponent vector length mismatch".into()));
            }
            let c: BigInt = t
                .coef
                .parse()
                .map_err(|_| Error::Format(format!("bad coefficient `{}`", t.coef)))?;
            p.add_term(t.exps, c);
        }
        Ok(p)
    }
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        if self.vars == other.vars {
            return self.terms == other.terms;
        }
        self.normal_form() == other.normal_form()
    }
}

impl Eq for MultiPoly {}

impl fmt::Display for MultiPoly {
    /// Human-readable form such as `3*x^2*y - y + 1`, terms in canonical order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.terms().enumerate() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        self.vars[i].clone()
                    } else {
                        format!("{}^{k}", self.vars[i])
                    }
                })
                .collect();
            let neg = c.is_negative();
            let mag = c.abs();
            match (n, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{mag}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[{}]({self})", self.vars.join(","))
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;

    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let (mut a, b) = self.aligned(rhs);
        for (e, c) in b.terms {
            a.add_term(e, c);
        }
        a
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;

    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self + &(-rhs)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let (a, b) = self.aligned(rhs);
        let mut out = MultiPoly::zero(a.vars.clone());
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: MultiPoly) -> MultiPoly {
        &self + &rhs
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        &self - &rhs
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}
