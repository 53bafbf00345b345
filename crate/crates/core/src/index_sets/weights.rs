use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Signed, Zero};

use super::MultiIndex;
use crate::error::{Error, Result};

/// Parses `"0.9"`, `"7/10"`, `"3"` or `"-1.25"` into an exact rational.
pub fn parse_rational(s: &str) -> Result<Ratio<i64>> {
    let s = s.trim();
    let bad = || Error::InvalidRational(s.to_string());
    if let Some((num, den)) = s.split_once('/') {
        let num: i64 = num.trim().parse().map_err(|_| bad())?;
        let den: i64 = den.trim().parse().map_err(|_| bad())?;
        if den == 0 {
            return Err(bad());
        }
        return Ok(Ratio::new(num, den));
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty()
        || !int_part
            .chars()
            .chain(frac_part.chars())
            .all(|c| c.is_ascii_digit())
        || frac_part.len() > 15
    {
        return Err(bad());
    }
    let den = 10i64.pow(frac_part.len() as u32);
    let digits = format!("{int_part}{frac_part}");
    let num: i64 = if digits.is_empty() {
        0
    } else {
        digits.parse().map_err(|_| bad())?
    };
    Ok(Ratio::new(if neg { -num } else { num }, den))
}

/// Positive anisotropy weights `w = (w_1, …, w_d)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Weights(Vec<Ratio<i64>>);

impl Weights {
    pub fn new(w: Vec<Ratio<i64>>) -> Result<Self> {
        super::check_dim(w.len())?;
        if let Some(bad) = w.iter().find(|x| !x.is_positive()) {
            return Err(Error::InvalidArgument(format!(
                "weight {bad} is not positive"
            )));
        }
        Ok(Weights(w))
    }

    /// Isotropic weights `(1, …, 1)`.
    pub fn ones(dim: usize) -> Result<Self> {
        Weights::new(vec![Ratio::from_integer(1); dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn values(&self) -> &[Ratio<i64>] {
        &self.0
    }

    /// Common denominator `L` so that every `L·w_j` is an integer.
    pub(crate) fn common_denominator(&self) -> i64 {
        self.0.iter().fold(1i64, |acc, w| acc.lcm(w.denom()))
    }

    /// `⟨w, h⟩` as an exact rational.
    pub fn norm(&self, h: &MultiIndex) -> Ratio<i64> {
        self.0
            .iter()
            .zip(h.coords())
            .map(|(w, &c)| w * Ratio::from_integer(c as i64))
            .fold(Ratio::zero(), |a, b| a + b)
    }
}

impl FromStr for Weights {
    type Err = Error;

    /// Comma separated list, e.g. `"0.9,0.8,0.7"`.
    fn from_str(s: &str) -> Result<Self> {
        let w = s
            .split(',')
            .map(parse_rational)
            .collect::<Result<Vec<_>>>()?;
        Weights::new(w)
    }
}

impl fmt::Display for Weights {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, w) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{w}")?;
        }
        Ok(())
    }
}

/// Parameters `(w, u)` of the weighted simplex `S_{w,u} = {h : ⟨w,h⟩ ≤ u}`.
///
/// All comparisons run on integers after scaling by a common denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Simplex {
    weights: Weights,
    u: Ratio<i64>,
    scaled_w: Vec<i64>,
    scaled_u: i64,
}

impl Simplex {
    pub fn new(weights: Weights, u: Ratio<i64>) -> Result<Self> {
        if !u.is_positive() {
            return Err(Error::InvalidArgument(format!(
                "radius {u} is not positive"
            )));
        }
        let l = weights.common_denominator().lcm(u.denom());
        let scale = |x: &Ratio<i64>| {
            (x.numer())
                .checked_mul(l / x.denom())
                .ok_or(Error::Overflow("weight scaling"))
        };
        let scaled_w = weights
            .values()
            .iter()
            .map(scale)
            .collect::<Result<Vec<_>>>()?;
        let scaled_u = scale(&u)?;
        Ok(Simplex {
            weights,
            u,
            scaled_w,
            scaled_u,
        })
    }

    /// The isotropic simplex `S_{1,k}`.
    pub fn isotropic(dim: usize, k: u32) -> Result<Self> {
        Simplex::new(
            Weights::ones(dim)?,
            Ratio::from_integer(i64::from(k.max(1))),
        )
        .map(|s| if k == 0 { s.with_zero_radius() } else { s })
    }

    fn with_zero_radius(mut self) -> Self {
        self.u = Ratio::zero();
        self.scaled_u = 0;
        self
    }

    pub fn dim(&self) -> usize {
        self.weights.dim()
    }

    pub fn weights(&self) -> &Weights {
        &self.weights
    }

    pub fn radius(&self) -> Ratio<i64> {
        self.u
    }

    /// Integer weights `L·w_j`.
    pub fn scaled_weights(&self) -> &[i64] {
        &self.scaled_w
    }

    /// Integer radius `L·u`.
    pub fn scaled_radius(&self) -> i64 {
        self.scaled_u
    }

    /// `L·⟨w, |h|⟩` for a possibly signed index given by its absolute values.
    pub fn scaled_norm(&self, h: &[u32]) -> i64 {
        self.scaled_w
            .iter()
            .zip(h)
            .map(|(&w, &c)| w * c as i64)
            .sum()
    }

    pub fn contains(&self, h: &MultiIndex) -> bool {
        self.scaled_norm(h.coords()) <= self.scaled_u
    }

    /// `⌊u / w_j⌋`, the extent of the simplex along axis `j`.
    pub fn axis_extent(&self, j: usize) -> u32 {
        (self.scaled_u / self.scaled_w[j]) as u32
    }

    pub fn is_isotropic(&self) -> bool {
        self.scaled_w.windows(2).all(|p| p[0] == p[1])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parsing() {
        assert_eq!(parse_rational("0.9").unwrap(), Ratio::new(9, 10));
        assert_eq!(parse_rational("7/10").unwrap(), Ratio::new(7, 10));
        assert_eq!(parse_rational("3").unwrap(), Ratio::from_integer(3));
        assert_eq!(parse_rational("-1.25").unwrap(), Ratio::new(-5, 4));
        assert_eq!(parse_rational(".5").unwrap(), Ratio::new(1, 2));
        assert_eq!(parse_rational("2.").unwrap(), Ratio::from_integer(2));
        for bad in ["", ".", "1/0", "abc", "1.2.3", "1e3"] {
            assert!(parse_rational(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn weights_validation() {
        assert!("0.9,0.8,0.7".parse::<Weights>().is_ok());
        assert!("0.9,0,0.7".parse::<Weights>().is_err());
        assert!("0.9,-1".parse::<Weights>().is_err());
        assert_eq!(
            "0.9,0.8".parse::<Weights>().unwrap().to_string(),
            "9/10,4/5"
        );
    }

    #[test]
    fn exact_boundary() {
        // 0.1 + 0.2 = 0.3 exactly here, unlike in binary floating point.
        let w: Weights = "0.1,0.2".parse().unwrap();
        let s = Simplex::new(w, parse_rational("0.3").unwrap()).unwrap();
        assert!(s.contains(&MultiIndex::new(vec![1, 1])));
        assert!(!s.contains(&MultiIndex::new(vec![2, 1])));
        assert_eq!(s.axis_extent(0), 3);
        assert_eq!(s.axis_extent(1), 1);
    }

    #[test]
    fn isotropic_radius_zero() {
        let s = Simplex::isotropic(2, 0).unwrap();
        assert!(s.contains(&MultiIndex::zero(2)));
        assert!(!s.contains(&MultiIndex::unit(2, 0)));
    }
}
