//! The coefficient field: fractions of rational-coefficient polynomials in
//! `nvars` indeterminates, kept in a unique canonical form so structural
//! equality decides field equality. `nvars = 0` is the plain rationals.

mod poly;

pub use poly::{Monomial, Poly};

use crate::error::{Error, Result};
use num::rational::BigRational;
use num::traits::{Signed, Zero};
use num::BigInt;
use std::fmt;

/// Canonical fraction `num/den`.
///
/// Invariants after construction: `num` and `den` are coprime; for
/// `nvars = 0` the denominator is a positive integer and the numerator an
/// integer with `gcd(|num|, den) = 1`; for `nvars >= 1` the denominator is
/// monic under grlex order (so a trivial denominator is literally `1`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scalar {
    num: Poly,
    den: Poly,
}

impl Scalar {
    pub fn new(num: Poly, den: Poly) -> Result<Scalar> {
        assert_eq!(num.nvars(), den.nvars());
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let nvars = num.nvars();
        if num.is_zero() {
            return Ok(Scalar {
                num: Poly::zero(nvars),
                den: Poly::one(nvars),
            });
        }
        // unit denominator: nothing to cancel
        if den.is_one() {
            if nvars == 0 {
                let v = num.as_constant().expect("nvars = 0 is constant");
                return Ok(Scalar {
                    num: Poly::constant(BigRational::from(v.numer().clone()), 0),
                    den: Poly::constant(BigRational::from(v.denom().clone()), 0),
                });
            }
            return Ok(Scalar { num, den });
        }
        let g = Poly::gcd(&num, &den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.exact_div(&g).expect("gcd divides numerator"),
                den.exact_div(&g).expect("gcd divides denominator"),
            )
        };
        if let Some(c) = den.as_constant() {
            // constant denominator folds into the numerator coefficients
            let folded = num.scale(&c.recip());
            if nvars == 0 {
                let v = folded.as_constant().expect("nvars = 0 is constant");
                num = Poly::constant(BigRational::from(v.numer().clone()), 0);
                den = Poly::constant(BigRational::from(v.denom().clone()), 0);
            } else {
                num = folded;
                den = Poly::one(nvars);
            }
        } else {
            let lc = den.leading().expect("nonzero").1.recip();
            num = num.scale(&lc);
            den = den.scale(&lc);
        }
        Ok(Scalar { num, den })
    }

    pub fn from_poly(p: Poly) -> Scalar {
        let nvars = p.nvars();
        Scalar::new(p, Poly::one(nvars)).expect("unit denominator")
    }

    pub fn from_rational(q: BigRational, nvars: usize) -> Scalar {
        Scalar::from_poly(Poly::constant(q, nvars))
    }

    pub fn from_int(n: i64, nvars: usize) -> Scalar {
        Scalar::from_poly(Poly::from_int(n, nvars))
    }

    pub fn zero(nvars: usize) -> Scalar {
        Scalar::from_poly(Poly::zero(nvars))
    }

    pub fn one(nvars: usize) -> Scalar {
        Scalar::from_poly(Poly::one(nvars))
    }

    pub fn var(var: usize, nvars: usize) -> Scalar {
        Scalar::from_poly(Poly::var(var, nvars))
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if let (Some(a), Some(b)) = (self.as_rational(), other.as_rational()) {
            return Scalar::from_rational(a + b, self.nvars());
        }
        if self.den.is_one() && other.den.is_one() {
            // nvars = 0 is fully covered by the rational path above
            return Scalar {
                num: self.num.add(&other.num),
                den: self.den.clone(),
            };
        }
        Scalar::new(
            self.num
                .mul(&other.den)
                .add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
        .expect("denominators nonzero")
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        // negation preserves the canonical form of both parts
        Scalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        if self.is_zero() || other.is_zero() {
            return Scalar::zero(self.nvars());
        }
        if let (Some(a), Some(b)) = (self.as_rational(), other.as_rational()) {
            return Scalar::from_rational(a * b, self.nvars());
        }
        if self.den.is_one() && other.den.is_one() {
            return Scalar {
                num: self.num.mul(&other.num),
                den: self.den.clone(),
            };
        }
        Scalar::new(self.num.mul(&other.num), self.den.mul(&other.den))
            .expect("denominators nonzero")
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let (Some(a), Some(b)) = (self.as_rational(), other.as_rational()) {
            return Ok(Scalar::from_rational(a / b, self.nvars()));
        }
        Scalar::new(self.num.mul(&other.den), self.den.mul(&other.num))
    }

    pub fn inv(&self) -> Result<Scalar> {
        Scalar::one(self.nvars()).div(self)
    }

    pub fn scale_int(&self, n: i64) -> Scalar {
        self.mul(&Scalar::from_int(n, self.nvars()))
    }

    /// Integer power; negative exponents invert (error on zero base).
    pub fn pow_i(&self, e: i64) -> Result<Scalar> {
        if e < 0 && self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(q) = self.as_rational() {
            use num::traits::Pow;
            return Ok(Scalar::from_rational(q.pow(e as i32), self.nvars()));
        }
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Scalar::one(self.nvars());
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    pub fn eval(&self, assignment: &[BigRational]) -> Result<BigRational> {
        assert_eq!(assignment.len(), self.nvars());
        let d = self.den.eval(assignment);
        if d.is_zero() {
            return Err(Error::DenominatorVanishes);
        }
        Ok(self.num.eval(assignment) / d)
    }

    /// Canonical rational form for `nvars = 0` scalars.
    pub fn as_rational(&self) -> Option<BigRational> {
        let n = self.num.as_constant()?;
        if self.den.is_one() {
            return Some(n);
        }
        let d = self.den.as_constant()?;
        if d.is_zero() {
            None
        } else if self.nvars() == 0 {
            // canonical: integer parts, coprime, positive denominator
            Some(BigRational::new_raw(
                n.numer().clone(),
                d.numer().clone(),
            ))
        } else {
            Some(n / d)
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else if self.nvars() == 0 {
            // reduced integer fraction, denominator positive
            let n = self.num.as_constant().unwrap();
            let d = self.den.as_constant().unwrap();
            write!(f, "{}/{}", n.numer(), d.numer())
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

/// Convenience for tests and samples: rational scalar p/q.
pub fn rat(p: i64, q: i64, nvars: usize) -> Scalar {
    Scalar::from_rational(
        BigRational::new(BigInt::from(p), BigInt::from(q)),
        nvars,
    )
}

impl Scalar {
    /// True if the scalar is a plain rational constant (any nvars).
    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn is_negative_constant(&self) -> bool {
        self.as_rational().map(|v| v.is_negative()).unwrap_or(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalize_reduces_rationals() {
        // 2/4 -> 1/2
        let s = Scalar::new(Poly::from_int(2, 0), Poly::from_int(4, 0)).unwrap();
        assert_eq!(s, rat(1, 2, 0));
        assert_eq!(s.to_string(), "1/2");
    }

    #[test]
    fn normalize_cancels_polynomial_factor() {
        // (u1^2 - 1)/(u1 - 1) -> u1 + 1
        let n = 1;
        let u1 = Poly::var(0, n);
        let num = u1.mul(&u1).sub(&Poly::one(n));
        let den = u1.sub(&Poly::one(n));
        let s = Scalar::new(num, den).unwrap();
        let expect = Scalar::from_poly(u1.add(&Poly::one(n)));
        assert_eq!(s, expect);
        assert_eq!(s.to_string(), "u1 + 1");
    }

    #[test]
    fn normalize_canonical_zero() {
        // 0/(u1 + 3) -> 0/1
        let n = 1;
        let den = Poly::var(0, n).add(&Poly::from_int(3, n));
        let s = Scalar::new(Poly::zero(n), den).unwrap();
        assert!(s.is_zero());
        assert!(s.denom().is_one());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            Scalar::new(Poly::one(0), Poly::zero(0)),
            Err(Error::ZeroDenominator)
        );
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(rat(1, 2, 0).add(&rat(1, 3, 0)), rat(5, 6, 0));
        let u1 = Scalar::var(0, 1);
        let inv = Scalar::one(1).div(&u1).unwrap();
        assert_eq!(inv.to_string(), "(1)/(u1)");
        assert!(u1.mul(&inv).is_one());
        assert_eq!(
            Scalar::one(0).div(&Scalar::zero(0)),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn normalization_is_idempotent() {
        let n = 2;
        let num = Poly::var(0, n).mul(&Poly::var(1, n)).add(&Poly::from_int(7, n));
        let den = Poly::var(1, n).scale(&BigRational::from(BigInt::from(3)));
        let s = Scalar::new(num, den).unwrap();
        let again = Scalar::new(s.numer().clone(), s.denom().clone()).unwrap();
        assert_eq!(s, again);
    }

    #[test]
    fn eval_examples() {
        // eval((u1+1)/2, u1 := 3) -> 2
        let n = 1;
        let s = Scalar::new(
            Poly::var(0, n).add(&Poly::one(n)),
            Poly::from_int(2, n),
        )
        .unwrap();
        let three = BigRational::from(BigInt::from(3));
        assert_eq!(s.eval(&[three]).unwrap(), BigRational::from(BigInt::from(2)));

        let inv = Scalar::one(n).div(&Scalar::var(0, n)).unwrap();
        assert_eq!(
            inv.eval(&[BigRational::zero()]),
            Err(Error::DenominatorVanishes)
        );

        assert_eq!(
            rat(5, 6, 0).eval(&[]).unwrap(),
            BigRational::new(BigInt::from(5), BigInt::from(6))
        );
    }
}
