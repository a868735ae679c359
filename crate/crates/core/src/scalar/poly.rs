//! Sparse multivariate polynomials with rational coefficients, ordered
//! graded-lexicographically with `u1 > u2 > ...`.

use num::rational::BigRational;
use num::traits::{One, Signed, Zero};
use num::BigInt;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// Exponent vector of a monomial. The `Ord` impl is graded-lexicographic:
/// higher total degree wins, ties broken by the exponent of `u1`, then `u2`, ...
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn unit(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`; caller must ensure divisibility.
    pub fn quotient_into(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
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

/// Sparse polynomial over the rationals. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Poly::constant(BigRational::one(), nvars)
    }

    pub fn constant(c: BigRational, nvars: usize) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::unit(nvars), c);
        }
        Poly { nvars, terms }
    }

    pub fn from_int(n: i64, nvars: usize) -> Self {
        Poly::constant(BigRational::from(BigInt::from(n)), nvars)
    }

    /// The indeterminate `u{var+1}`.
    pub fn var(var: usize, nvars: usize) -> Self {
        assert!(var < nvars);
        let mut exps = vec![0; nvars];
        exps[var] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(Monomial(exps), BigRational::one());
        Poly { nvars, terms }
    }

    pub fn monomial(m: Monomial, c: BigRational, nvars: usize) -> Self {
        assert_eq!(m.0.len(), nvars);
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().map(|c| c.is_one()).unwrap_or(false)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.keys().all(|m| m.is_unit())
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if m.is_unit() {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Leading (grlex-greatest) monomial and coefficient.
    pub fn leading(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    fn insert_add(terms: &mut BTreeMap<Monomial, BigRational>, m: Monomial, c: BigRational) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars);
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            Self::insert_add(&mut terms, m.clone(), c.clone());
        }
        Poly {
            nvars: self.nvars,
            terms,
        }
    }

    pub fn neg(&self) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars);
        let mut terms = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                Self::insert_add(&mut terms, m1.mul(m2), c1 * c2);
            }
        }
        Poly {
            nvars: self.nvars,
            terms,
        }
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.0[var]).max().unwrap_or(0)
    }

    pub fn eval(&self, assignment: &[BigRational]) -> BigRational {
        assert_eq!(assignment.len(), self.nvars);
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    t *= &assignment[v];
                }
            }
            acc += t;
        }
        acc
    }

    /// Exact division: `Some(q)` with `self == q * d`, or `None` if `d` does
    /// not divide `self`.
    pub fn exact_div(&self, d: &Poly) -> Option<Poly> {
        assert_eq!(self.nvars, d.nvars);
        assert!(!d.is_zero());
        let mut rem = self.clone();
        let mut quo = BTreeMap::new();
        let (dm, dc) = {
            let (m, c) = d.leading().unwrap();
            (m.clone(), c.clone())
        };
        while !rem.is_zero() {
            let (rm, rc) = {
                let (m, c) = rem.leading().unwrap();
                (m.clone(), c.clone())
            };
            if !dm.divides(&rm) {
                return None;
            }
            let qm = dm.quotient_into(&rm);
            let qc = &rc / &dc;
            rem = rem.sub(&d.mul(&Poly::monomial(qm.clone(), qc.clone(), self.nvars)));
            Self::insert_add(&mut quo, qm, qc);
        }
        Some(Poly {
            nvars: self.nvars,
            terms: quo,
        })
    }

    /// Divide by the leading coefficient so the grlex-leading term is 1.
    pub fn make_monic(&self) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
        }
    }

    /// Coefficients of `self` viewed as a univariate polynomial in `var`,
    /// keyed by the exponent of `var` (exponent zeroed in the keys).
    fn univar_coeffs(&self, var: usize) -> BTreeMap<u32, Poly> {
        let mut out: BTreeMap<u32, Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.0[var];
            let mut rest = m.clone();
            rest.0[var] = 0;
            let entry = out.entry(e).or_insert_with(|| Poly::zero(self.nvars));
            *entry = entry.add(&Poly::monomial(rest, c.clone(), self.nvars));
        }
        out
    }

    fn univar_lead(&self, var: usize) -> Poly {
        let d = self.degree_in(var);
        let mut out = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            if m.0[var] == d {
                let mut rest = m.clone();
                rest.0[var] = 0;
                out = out.add(&Poly::monomial(rest, c.clone(), self.nvars));
            }
        }
        out
    }

    fn content_in(&self, var: usize) -> Poly {
        let mut c = Poly::zero(self.nvars);
        for (_, coeff) in self.univar_coeffs(var) {
            c = Poly::gcd(&c, &coeff);
            if c.is_one() {
                break;
            }
        }
        c
    }

    fn primitive_part_in(&self, var: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let c = self.content_in(var);
        self.exact_div(&c).expect("content divides")
    }

    /// Pseudo-remainder of `self` by `d` in the variable `var`.
    fn prem(&self, d: &Poly, var: usize) -> Poly {
        let dd = d.degree_in(var);
        let lead = d.univar_lead(var);
        let mut r = self.clone();
        while !r.is_zero() && r.degree_in(var) >= dd {
            let dr = r.degree_in(var);
            let lr = r.univar_lead(var);
            let mut exps = vec![0; self.nvars];
            exps[var] = dr - dd;
            let shift = Poly::monomial(Monomial(exps), BigRational::one(), self.nvars);
            r = r.mul(&lead).sub(&lr.mul(&shift).mul(d));
        }
        r
    }

    /// Monic gcd over the rationals, via a primitive pseudo-remainder
    /// sequence recursing on the coefficient ring.
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        assert_eq!(a.nvars, b.nvars);
        if a.is_zero() {
            return b.make_monic();
        }
        if b.is_zero() {
            return a.make_monic();
        }
        if a.is_constant() || b.is_constant() {
            return Poly::one(a.nvars);
        }
        let var = (0..a.nvars)
            .find(|&v| a.degree_in(v) > 0 || b.degree_in(v) > 0)
            .expect("nonconstant polynomial has a variable");
        Self::gcd_in_var(a, b, var).make_monic()
    }

    fn gcd_in_var(a: &Poly, b: &Poly, var: usize) -> Poly {
        let ca = a.content_in(var);
        let cb = b.content_in(var);
        let c = Poly::gcd(&ca, &cb);
        let mut p = a.exact_div(&ca).expect("content divides");
        let mut q = b.exact_div(&cb).expect("content divides");
        if p.degree_in(var) < q.degree_in(var) {
            std::mem::swap(&mut p, &mut q);
        }
        loop {
            if q.degree_in(var) == 0 {
                // primitive and free of the main variable: a unit factor
                return c;
            }
            let r = p.prem(&q, var);
            if r.is_zero() {
                return c.mul(&q.primitive_part_in(var));
            }
            p = q;
            q = r.primitive_part_in(var);
        }
    }
}

fn fmt_rational(c: &BigRational) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        // leading term first
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut pieces: Vec<String> = Vec::new();
            if !mag.is_one() || m.is_unit() {
                pieces.push(fmt_rational(&mag));
            }
            for (v, &e) in m.0.iter().enumerate() {
                if e == 1 {
                    pieces.push(format!("u{}", v + 1));
                } else if e > 1 {
                    pieces.push(format!("u{}^{}", v + 1, e));
                }
            }
            write!(f, "{}", pieces.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(var: usize, nvars: usize) -> Poly {
        Poly::var(var, nvars)
    }

    #[test]
    fn gcd_cancels_common_factor() {
        // u1^2 - 1 and u1 - 1 share u1 - 1
        let n = 1;
        let p = u(0, n).mul(&u(0, n)).sub(&Poly::one(n));
        let q = u(0, n).sub(&Poly::one(n));
        let g = Poly::gcd(&p, &q);
        assert_eq!(g, q.make_monic());
        assert_eq!(p.exact_div(&g).unwrap(), u(0, n).add(&Poly::one(n)));
    }

    #[test]
    fn gcd_of_coprime_is_one() {
        let n = 2;
        let p = u(0, n).add(&Poly::one(n));
        let q = u(1, n).sub(&Poly::one(n));
        assert!(Poly::gcd(&p, &q).is_one());
    }

    #[test]
    fn gcd_multivariate() {
        // (u1 + u2)*(u1 - u2) vs (u1 + u2)*u1
        let n = 2;
        let s = u(0, n).add(&u(1, n));
        let p = s.mul(&u(0, n).sub(&u(1, n)));
        let q = s.mul(&u(0, n));
        let g = Poly::gcd(&p, &q);
        assert_eq!(g, s.make_monic());
    }

    #[test]
    fn exact_div_detects_nondivisor() {
        let n = 1;
        let p = u(0, n).add(&Poly::one(n));
        let q = u(0, n).sub(&Poly::one(n));
        assert!(p.exact_div(&q).is_none());
    }

    #[test]
    fn display_orders_terms() {
        let n = 2;
        let p = u(1, n).scale(&BigRational::from(BigInt::from(-1)))
            .add(&u(0, n).scale(&BigRational::from(BigInt::from(2))));
        assert_eq!(p.to_string(), "2*u1 - u2");
    }
}
