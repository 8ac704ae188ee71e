//! Truncated power series with exact integer coefficients.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Coefficients `c_0..=c_N` of a power series truncated after `q^N`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TruncatedSeries {
    coeffs: Vec<i128>,
}

impl TruncatedSeries {
    /// The constant series `1`.
    pub fn one(order: usize) -> Self {
        let mut coeffs = vec![0; order + 1];
        coeffs[0] = 1;
        TruncatedSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![0; order + 1],
        }
    }

    /// Pads with zeros or truncates `coeffs` to length `order + 1`.
    pub fn from_coeffs(mut coeffs: Vec<i128>, order: usize) -> Self {
        coeffs.resize(order + 1, 0);
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> i128 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    /// Cauchy product truncated at the common order.
    pub fn multiply(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        let order = self.order();
        let mut out = vec![0i128; order + 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs[..=order - i].iter().enumerate() {
                let term = a.checked_mul(b).ok_or(Error::Overflow("series multiply"))?;
                out[i + j] = out[i + j]
                    .checked_add(term)
                    .ok_or(Error::Overflow("series multiply"))?;
            }
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// Divides in place by `1 + sign q^e` using `g_k = f_k - sign g_{k-e}`.
    fn divide_by_binomial(&mut self, factor: FactorSpec) -> Result<()> {
        let e = factor.exponent as usize;
        let s = factor.sign.as_i128();
        for k in e..self.coeffs.len() {
            let prev = self.coeffs[k - e];
            self.coeffs[k] = self.coeffs[k]
                .checked_sub(s * prev)
                .ok_or(Error::Overflow("series division"))?;
        }
        Ok(())
    }

    /// Multiplies in place by `1 + sign q^e`.
    fn multiply_by_binomial(&mut self, factor: FactorSpec) -> Result<()> {
        let e = factor.exponent as usize;
        let s = factor.sign.as_i128();
        for k in (e..self.coeffs.len()).rev() {
            let prev = self.coeffs[k - e];
            self.coeffs[k] = self.coeffs[k]
                .checked_add(s * prev)
                .ok_or(Error::Overflow("series multiply"))?;
        }
        Ok(())
    }

    /// `n,coefficient` lines with a header.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,coefficient\n");
        for (n, c) in self.coeffs.iter().enumerate() {
            out.push_str(&format!("{n},{c}\n"));
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.coeffs).expect("integers serialize")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn as_i128(self) -> i128 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// The factor `(1 + sign q^exponent)^(-1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FactorSpec {
    pub sign: Sign,
    pub exponent: u32,
}

impl FactorSpec {
    pub fn new(sign: Sign, exponent: u32) -> Result<Self> {
        if exponent == 0 {
            return Err(Error::InvalidArgument("factor exponent must be at least 1".into()));
        }
        Ok(FactorSpec { sign, exponent })
    }

    /// `(1 - q^e)^(-1)`
    pub fn geometric(exponent: u32) -> Self {
        FactorSpec::new(Sign::Minus, exponent).expect("positive exponent")
    }
}

/// `prod (1 + s_i q^{e_i})^(-1)` up to `q^order`. Factors with exponent above
/// the order act as the identity.
pub fn expand_inverse_product(factors: &[FactorSpec], order: usize) -> Result<TruncatedSeries> {
    let mut series = TruncatedSeries::one(order);
    for &f in factors {
        if f.exponent as usize <= order {
            series.divide_by_binomial(f)?;
        }
    }
    Ok(series)
}

/// `prod (1 + s_i q^{e_i})` up to `q^order`; the denominator of
/// [`expand_inverse_product`].
pub fn expand_product(factors: &[FactorSpec], order: usize) -> Result<TruncatedSeries> {
    let mut series = TruncatedSeries::one(order);
    for &f in factors {
        if f.exponent as usize <= order {
            series.multiply_by_binomial(f)?;
        }
    }
    Ok(series)
}

/// Factors of `prod_{m>=1} (1 - x^m)^(-2)` that matter up to `order`.
pub fn two_colored_factors(order: usize) -> Vec<FactorSpec> {
    (1..=order as u32)
        .flat_map(|m| [FactorSpec::geometric(m), FactorSpec::geometric(m)])
        .collect()
}

/// Generating function of partitions into parts of two kinds.
pub fn two_colored_gf(order: usize) -> Result<TruncatedSeries> {
    expand_inverse_product(&two_colored_factors(order), order)
}

/// Factors `(1 + (-1)^k q^{2k-1})^(-1)` for every `k` with `2k - 1 <= order`.
pub fn a300574_factors(order: usize) -> Vec<FactorSpec> {
    (1u32..)
        .map(|k| (k, 2 * k - 1))
        .take_while(|&(_, e)| e as usize <= order)
        .map(|(k, e)| {
            let sign = if k % 2 == 0 { Sign::Plus } else { Sign::Minus };
            FactorSpec { sign, exponent: e }
        })
        .collect()
}

/// `1 / ((1 - q)(1 + q^3)(1 - q^5)(1 + q^7)...)` up to `q^order`.
pub fn a300574_gf(order: usize) -> Result<TruncatedSeries> {
    expand_inverse_product(&a300574_factors(order), order)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_plus_q_times_one_minus_q() {
        let a = TruncatedSeries::from_coeffs(vec![1, 1], 4);
        let b = TruncatedSeries::from_coeffs(vec![1, -1], 4);
        assert_eq!(a.multiply(&b).unwrap().coeffs(), &[1, 0, -1, 0, 0]);
        assert_eq!(a.multiply(&TruncatedSeries::one(4)).unwrap(), a);
        assert!(a.multiply(&TruncatedSeries::one(3)).is_err());
    }

    #[test]
    fn geometric_series() {
        let s = expand_inverse_product(&[FactorSpec::geometric(1)], 6).unwrap();
        assert_eq!(s.coeffs(), &[1; 7]);
    }

    #[test]
    fn parts_one_and_two() {
        let f = [FactorSpec::geometric(1), FactorSpec::geometric(2)];
        assert_eq!(expand_inverse_product(&f, 4).unwrap().coeffs(), &[1, 1, 2, 2, 3]);
    }

    #[test]
    fn two_colored_small_coefficients() {
        // Partitions into parts of two kinds: 1, 2, 5, 10, 20, 36, 65, 110.
        let s = two_colored_gf(7).unwrap();
        assert_eq!(s.coeffs(), &[1, 2, 5, 10, 20, 36, 65, 110]);
    }

    #[test]
    fn a300574_low_order_by_hand() {
        // 1/((1-q)(1+q^3)) = (1 + q + q^2 + q^3 + ...)(1 - q^3 + ...)
        let s = a300574_gf(3).unwrap();
        assert_eq!(s.coeffs(), &[1, 1, 1, 0]);
        assert_eq!(a300574_factors(7).len(), 4);
    }

    #[test]
    fn zero_order_is_just_the_constant() {
        assert_eq!(two_colored_gf(0).unwrap().coeffs(), &[1]);
        assert_eq!(a300574_gf(0).unwrap().coeffs(), &[1]);
    }

    #[test]
    fn overflow_is_reported() {
        assert!(two_colored_gf(1200).is_err());
    }

    #[test]
    fn csv_form() {
        let s = expand_inverse_product(&[FactorSpec::geometric(1)], 2).unwrap();
        assert_eq!(s.to_csv(), "n,coefficient\n0,1\n1,1\n2,1\n");
        assert_eq!(s.to_json(), "[1,1,1]");
    }
}
