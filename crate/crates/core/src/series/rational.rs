use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::poly::{MultiPoly, Vars};
use crate::error::{Error, Result};

/// `numerator / denominator`, both polynomials over the same variables. The
/// first variable is the series variable (`x`); the others are auxiliary
/// markers. The denominator's `x^0` part is normalized to exactly 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalGF {
    num: MultiPoly,
    den: MultiPoly,
}

impl RationalGF {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self> {
        if num.vars() != den.vars() {
            return Err(Error::VariableMismatch {
                left: num.vars().names().to_vec(),
                right: den.vars().names().to_vec(),
            });
        }
        if num.vars().is_empty() {
            return Err(Error::Parameter(
                "a series needs at least one variable".into(),
            ));
        }
        let lead = den.slices(0).swap_remove(0);
        if !lead.is_constant() {
            return Err(Error::Normalization(format!(
                "denominator's x^0 part {lead} involves auxiliary variables"
            )));
        }
        let c = lead.constant_term();
        if c.is_one() {
            return Ok(RationalGF { num, den });
        }
        if c.is_zero() {
            return Err(Error::Normalization("denominator vanishes at x = 0".into()));
        }
        match (num.div_exact(&c), den.div_exact(&c)) {
            (Some(num), Some(den)) => Ok(RationalGF { num, den }),
            _ => Err(Error::Normalization(format!(
                "constant term {c} is not invertible over the integers"
            ))),
        }
    }

    pub fn numerator(&self) -> &MultiPoly {
        &self.num
    }

    pub fn denominator(&self) -> &MultiPoly {
        &self.den
    }

    pub fn vars(&self) -> &Vars {
        self.num.vars()
    }

    /// Names of the auxiliary (non-series) variables.
    pub fn aux_vars(&self) -> &[String] {
        &self.vars().names()[1..]
    }

    /// Coefficients of `x^0 ..= x^n_max` by the linear recurrence
    /// `c_n = num_n − Σ_{j≥1} den_j · c_{n−j}`.
    pub fn series(&self, n_max: usize) -> Vec<MultiPoly> {
        let num = self.num.slices(0);
        let den = self.den.slices(0);
        let aux = num[0].vars().clone();
        let mut out: Vec<MultiPoly> = Vec::with_capacity(n_max + 1);
        for n in 0..=n_max {
            let mut c = num.get(n).cloned().unwrap_or_else(|| MultiPoly::zero(&aux));
            for (j, d) in den.iter().enumerate().skip(1).take(n) {
                if !d.is_zero() {
                    c = c - d * &out[n - j];
                }
            }
            out.push(c);
        }
        out
    }

    /// Coefficients of `x^1 ..= x^n`, as polynomials in the auxiliary variables.
    pub fn expand(&self, n: usize) -> Vec<MultiPoly> {
        let mut s = self.series(n);
        s.remove(0);
        s
    }

    /// Sum of the two series, over the common denominator.
    pub fn try_add(&self, other: &RationalGF) -> Result<RationalGF> {
        let num = self
            .num
            .try_mul(&other.den)?
            .try_add(&other.num.try_mul(&self.den)?)?;
        RationalGF::new(num, self.den.try_mul(&other.den)?)
    }

    pub fn specialize_at_one<S: AsRef<str>>(&self, names: &[S]) -> Result<RationalGF> {
        if names.iter().any(|n| n.as_ref() == self.vars().names()[0]) {
            return Err(Error::Parameter(
                "cannot specialize the series variable".into(),
            ));
        }
        RationalGF::new(
            self.num.specialize_at_one(names)?,
            self.den.specialize_at_one(names)?,
        )
    }

    /// True when every expanded coefficient up to `x^n` is nonnegative.
    pub fn nonnegative_up_to(&self, n: usize) -> bool {
        self.expand(n)
            .iter()
            .all(|c| c.terms().all(|(_, a)| !a.is_negative()))
    }
}

/// For each `n ≤ N`, `Σ exp_var · coef` over the `x^n` coefficient with all
/// auxiliary variables at 1: the coefficientwise `∂/∂var` at 1.
pub fn total_weight_series(gf: &RationalGF, var: &str, n: usize) -> Result<Vec<BigInt>> {
    if var == gf.vars().names()[0] {
        return Err(Error::Parameter(format!(
            "{var} is the series variable, not an auxiliary one"
        )));
    }
    let i = gf
        .aux_vars()
        .iter()
        .position(|v| v == var)
        .ok_or_else(|| Error::Parameter(format!("unknown variable {var}")))?;
    Ok(gf.expand(n).iter().map(|c| c.weight_at_one(i)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xq() -> (Vars, MultiPoly, MultiPoly, MultiPoly) {
        let vars = Vars::new(&["x", "q"]);
        let g = vars.generators();
        let one = MultiPoly::constant(&vars, 1);
        (vars, one, g[0].clone(), g[1].clone())
    }

    #[test]
    fn long_division() {
        // x(2 + x) / (1 − x − x²)
        let (_, one, x, _) = xq();
        let gf = RationalGF::new(&x * (&one * 2 + &x), &one - &x - x.pow(2)).unwrap();
        let got: Vec<String> = gf.expand(4).iter().map(|c| c.to_string()).collect();
        assert_eq!(got, ["2", "3", "5", "8"]);
    }

    #[test]
    fn polynomial_denominator_one() {
        let (_, one, x, q) = xq();
        let num = &x * &q + x.pow(3) * 4;
        let gf = RationalGF::new(num, one).unwrap();
        let got: Vec<String> = gf.expand(4).iter().map(|c| c.to_string()).collect();
        assert_eq!(got, ["q", "0", "4", "0"]);
    }

    #[test]
    fn normalization() {
        let (_, one, x, q) = xq();
        let gf = RationalGF::new(-&x, -&one + &x).unwrap();
        assert_eq!(gf.denominator().constant_term(), BigInt::one());
        assert_eq!(gf.expand(3)[2].to_string(), "1");
        let scaled = RationalGF::new(&x * 2, &one * 2 - &x * 4).unwrap();
        assert_eq!(scaled.expand(2)[1].to_string(), "2");
        assert!(matches!(
            RationalGF::new(x.clone(), &one * 2 - &x),
            Err(Error::Normalization(_))
        ));
        assert!(RationalGF::new(x.clone(), q.clone()).is_err());
        assert!(RationalGF::new(x.clone(), x.clone()).is_err());
    }

    #[test]
    fn weights() {
        let (_, one, x, q) = xq();
        // x(q + q^2) / (1 - x): every coefficient is q + q^2
        let gf = RationalGF::new(&x * (&q + q.pow(2)), &one - &x).unwrap();
        assert_eq!(
            total_weight_series(&gf, "q", 2).unwrap(),
            [3.into(), 3.into()]
        );
        assert!(total_weight_series(&gf, "x", 2).is_err());
        assert!(total_weight_series(&gf, "p", 2).is_err());
        let flat = RationalGF::new(x.clone(), &one - &x).unwrap();
        assert!(total_weight_series(&flat, "q", 5)
            .unwrap()
            .iter()
            .all(Zero::is_zero));
    }
}
