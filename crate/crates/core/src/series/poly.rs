use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An ordered list of variable names shared by a family of polynomials.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vars(Arc<[String]>);

impl Vars {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Self {
        Vars(names.iter().map(|s| s.as_ref().to_string()).collect())
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|v| v == name)
    }

    fn without(&self, drop: &[usize]) -> Vars {
        Vars(
            self.0
                .iter()
                .enumerate()
                .filter(|(i, _)| !drop.contains(i))
                .map(|(_, v)| v.clone())
                .collect(),
        )
    }

    /// The variables themselves, as degree-one polynomials.
    pub fn generators(&self) -> Vec<MultiPoly> {
        (0..self.len())
            .map(|i| {
                let mut exps = vec![0; self.len()];
                exps[i] = 1;
                MultiPoly::monomial(self, BigInt::one(), exps)
            })
            .collect()
    }
}

/// Exponent vector, ordered graded-lexicographically: total degree first,
/// then the exponents in variable order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial with big-integer coefficients. Zero coefficients are
/// never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Vars,
    terms: BTreeMap<Monomial, BigInt>,
}

/// JSON term: `{"exp": [..], "coef": "decimal"}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<u32>,
    pub coef: String,
}

impl MultiPoly {
    pub fn zero(vars: &Vars) -> Self {
        MultiPoly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &Vars, c: impl Into<BigInt>) -> Self {
        Self::monomial(vars, c.into(), vec![0; vars.len()])
    }

    pub fn monomial(vars: &Vars, coef: BigInt, exps: Vec<u32>) -> Self {
        assert_eq!(exps.len(), vars.len(), "exponent arity");
        let mut p = Self::zero(vars);
        p.add_term(Monomial(exps), coef);
        p
    }

    pub fn var(vars: &Vars, name: &str) -> Result<Self> {
        let i = vars
            .index_of(name)
            .ok_or_else(|| Error::Parameter(format!("unknown variable {name}")))?;
        Ok(vars.generators().swap_remove(i))
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
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
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: &[u32]) -> BigInt {
        self.terms
            .get(&Monomial(exps.to_vec()))
            .cloned()
            .unwrap_or_default()
    }

    /// The coefficient of the all-zero monomial.
    pub fn constant_term(&self) -> BigInt {
        self.coefficient(&vec![0; self.vars.len()])
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
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

    fn same_vars(&self, other: &Self) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::VariableMismatch {
                left: self.vars.names().to_vec(),
                right: other.vars.names().to_vec(),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.same_vars(other)?;
        let mut out = Self::zero(&self.vars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let exps = m1.0.iter().zip(&m2.0).map(|(a, b)| a + b).collect();
                out.add_term(Monomial(exps), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero(&self.vars);
        for (m, a) in &self.terms {
            out.add_term(m.clone(), a * c);
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::constant(&self.vars, 1);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Largest exponent of variable `var` (0 for the zero polynomial).
    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.0[var]).max().unwrap_or(0)
    }

    /// Splits by powers of `var`: entry `j` is the coefficient of `var^j`, as a
    /// polynomial in the remaining variables.
    pub fn slices(&self, var: usize) -> Vec<MultiPoly> {
        let rest = self.vars.without(&[var]);
        let mut out = vec![MultiPoly::zero(&rest); self.degree_in(var) as usize + 1];
        for (m, c) in &self.terms {
            let mut exps = m.0.clone();
            let j = exps.remove(var) as usize;
            out[j].add_term(Monomial(exps), c.clone());
        }
        out
    }

    /// Exact division by `var^e`; fails if some term has a smaller exponent.
    pub fn div_var_power(&self, var: usize, e: u32) -> Result<Self> {
        let mut out = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            if m.0[var] < e {
                return Err(Error::Domain(format!(
                    "term {} is not divisible by {}^{e}",
                    MultiPoly::monomial(&self.vars, c.clone(), m.0.clone()),
                    self.vars.names()[var]
                )));
            }
            let mut exps = m.0.clone();
            exps[var] -= e;
            out.add_term(Monomial(exps), c.clone());
        }
        Ok(out)
    }

    /// Sets the named variables to 1 and drops them from the variable list.
    pub fn specialize_at_one<S: AsRef<str>>(&self, names: &[S]) -> Result<Self> {
        let mut drop = Vec::new();
        for name in names {
            let i = self
                .vars
                .index_of(name.as_ref())
                .ok_or_else(|| Error::Parameter(format!("unknown variable {}", name.as_ref())))?;
            if !drop.contains(&i) {
                drop.push(i);
            }
        }
        let rest = self.vars.without(&drop);
        let mut out = Self::zero(&rest);
        for (m, c) in &self.terms {
            let exps =
                m.0.iter()
                    .enumerate()
                    .filter(|(i, _)| !drop.contains(i))
                    .map(|(_, &e)| e)
                    .collect();
            out.add_term(Monomial(exps), c.clone());
        }
        Ok(out)
    }

    /// The same terms over a renamed variable list of equal length.
    pub fn with_vars(&self, vars: &Vars) -> Result<Self> {
        if vars.len() != self.vars.len() {
            return Err(Error::VariableMismatch {
                left: self.vars.names().to_vec(),
                right: vars.names().to_vec(),
            });
        }
        Ok(MultiPoly {
            vars: vars.clone(),
            terms: self.terms.clone(),
        })
    }

    /// Value with every variable set to 1.
    pub fn value_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// `∂/∂var` evaluated with every variable at 1: `Σ exp_var · coef`.
    pub fn weight_at_one(&self, var: usize) -> BigInt {
        self.terms
            .iter()
            .map(|(m, c)| c * BigInt::from(m.0[var]))
            .sum()
    }

    /// Divides every coefficient by `c`, which must divide them all.
    pub fn div_exact(&self, c: &BigInt) -> Option<Self> {
        let mut out = Self::zero(&self.vars);
        for (m, a) in &self.terms {
            let (q, r) = a.div_rem(c);
            if !r.is_zero() {
                return None;
            }
            out.add_term(m.clone(), q);
        }
        Some(out)
    }

    pub fn to_json_terms(&self) -> Vec<TermJson> {
        self.terms
            .iter()
            .map(|(m, c)| TermJson {
                exp: m.0.clone(),
                coef: c.to_string(),
            })
            .collect()
    }

    pub fn from_json_terms(vars: &Vars, terms: &[TermJson]) -> Result<Self> {
        let mut out = Self::zero(vars);
        for t in terms {
            if t.exp.len() != vars.len() {
                return Err(Error::Parameter(format!(
                    "exponent vector {:?} does not match {} variables",
                    t.exp,
                    vars.len()
                )));
            }
            let c: BigInt = t
                .coef
                .parse()
                .map_err(|_| Error::Parameter(format!("bad coefficient {:?}", t.coef)))?;
            out.add_term(Monomial(t.exp.clone()), c);
        }
        Ok(out)
    }
}

impl fmt::Display for MultiPoly {
    /// Terms in graded-lex order joined by ` + ` / ` - `, e.g.
    /// `p^4*q^3 + 3*p^5*q^4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            match (i, sign) {
                (0, "-") => f.write_str("-")?,
                (0, _) => {}
                _ => write!(f, " {sign} ")?,
            }
            let abs = c.abs();
            let factors: Vec<String> =
                m.0.iter()
                    .zip(self.vars.names())
                    .filter(|(e, _)| **e > 0)
                    .map(|(&e, v)| {
                        if e == 1 {
                            v.clone()
                        } else {
                            format!("{v}^{e}")
                        }
                    })
                    .collect();
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&factors.join("*"))?;
            } else {
                write!(f, "{abs}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                self.$checked(rhs).expect("operands share variables")
            }
        }
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                (&self).$method(rhs)
            }
        }
        impl $tr<MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl Mul<i64> for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: i64) -> MultiPoly {
        self.scale(&BigInt::from(rhs))
    }
}

impl Mul<i64> for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: i64) -> MultiPoly {
        self.scale(&BigInt::from(rhs))
    }
}
