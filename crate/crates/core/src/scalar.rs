//! Exact scalars: rationals and polynomials in the parameter ξ.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use num_rational::BigRational as Rational;

use crate::error::{Error, Result};

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Integer value of `r`, if it has one.
pub fn as_integer(r: &Rational) -> Option<i64> {
    if r.is_integer() {
        i64::try_from(r.to_integer()).ok()
    } else {
        None
    }
}

/// Coefficient ring for [`crate::formal::FormalSum`].
pub trait Coeff:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Coeff for T where
    T: Clone
        + PartialEq
        + fmt::Debug
        + fmt::Display
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
{
}

/// Polynomial in ξ with rational coefficients, lowest degree first.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    pub fn xi() -> Self {
        Poly::new(vec![rat(0), rat(1)])
    }

    pub fn xi_pow(e: usize) -> Self {
        let mut c = vec![rat(0); e + 1];
        c[e] = rat(1);
        Poly { coeffs: c }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeffs.first().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Falling factorial f(f-1)...(f-b+1); 1 when b = 0.
    pub fn falling_factorial(&self, b: usize) -> Poly {
        (0..b).fold(Poly::one(), |acc, j| {
            acc * (self.clone() - Poly::constant(rat(j as i64)))
        })
    }
}

impl From<Rational> for Poly {
    fn from(c: Rational) -> Self {
        Poly::constant(c)
    }
}

impl Zero for Poly {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for Poly {
    fn one() -> Self {
        Poly::constant(rat(1))
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, o: Poly) -> Poly {
        let (mut long, short) = if self.coeffs.len() >= o.coeffs.len() {
            (self.coeffs, o.coeffs)
        } else {
            (o.coeffs, self.coeffs)
        };
        for (a, b) in long.iter_mut().zip(short) {
            *a += b;
        }
        Poly::new(long)
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, o: Poly) -> Poly {
        self + (-o)
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, o: Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Poly::new(c)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let unit = mag.is_one();
            match (e, unit) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => {}
                (_, false) => write!(f, "{mag}*")?,
            }
            match e {
                0 => {}
                1 => write!(f, "xi")?,
                _ => write!(f, "xi^{e}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_normalizes() {
        let r = frac(4, -6);
        assert_eq!(r, frac(-2, 3));
        assert_eq!(r.denom(), &BigInt::from(3));
        assert!((r.clone() + (-r)).is_zero());
    }

    #[test]
    fn parse_roundtrip() {
        for s in ["0", "-3/2", "7", "5/3"] {
            assert_eq!(parse_rational(s).unwrap().to_string(), s);
        }
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn poly_arith() {
        let x = Poly::xi();
        let p = (x.clone() - Poly::one()) * (x.clone() + Poly::one());
        assert_eq!(p, Poly::xi_pow(2) - Poly::one());
        assert_eq!(p.degree(), Some(2));
        assert_eq!(Poly::zero().degree(), None);
        assert_eq!(p.eval(&rat(3)), rat(8));
        assert_eq!(p.to_string(), "xi^2 - 1");
        assert_eq!((x.clone() - x).degree(), None);
    }

    #[test]
    fn falling() {
        let f = Poly::xi() - Poly::constant(rat(2));
        assert_eq!(f.falling_factorial(0), Poly::one());
        let g = f.falling_factorial(3);
        assert_eq!(g.eval(&rat(7)), rat(5 * 4 * 3));
        assert_eq!(g.eval(&rat(3)), rat(0));
    }

    #[test]
    fn display_mixed() {
        let p = Poly::new(vec![frac(-1, 2), rat(0), rat(-3)]);
        assert_eq!(p.to_string(), "-3*xi^2 - 1/2");
    }
}
