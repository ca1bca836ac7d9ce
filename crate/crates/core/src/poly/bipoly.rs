//! Sparse polynomials in the two gains `k1`, `k2`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::rational::Rational;
use super::ring::Ring;

/// Exponent pair `(i, j)` of the monomial `k1^i k2^j`.
pub type Exponent = (u32, u32);

/// Polynomial in `(k1, k2)`; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    terms: BTreeMap<Exponent, Rational>,
}

impl BiPoly {
    pub fn constant(c: Rational) -> Self {
        Self::term(c, (0, 0))
    }

    pub fn term(c: Rational, exp: Exponent) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        BiPoly { terms }
    }

    pub fn k1() -> Self {
        Self::term(Rational::one(), (1, 0))
    }

    pub fn k2() -> Self {
        Self::term(Rational::one(), (0, 1))
    }

    /// `c0 + c1 k1 + c2 k2`
    pub fn affine(c0: &Rational, c1: &Rational, c2: &Rational) -> Self {
        let mut p = Self::constant(c0.clone());
        p.add_term((1, 0), c1.clone());
        p.add_term((0, 1), c2.clone());
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Exponent, Rational)>) -> Self {
        let mut p = BiPoly::default();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: Exponent) -> Rational {
        self.terms.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(i, j)| i + j).max()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&e| e == (0, 0))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return BiPoly::default();
        }
        BiPoly {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    pub fn eval(&self, k1: &Rational, k2: &Rational) -> Rational {
        let max_i = self.terms.keys().map(|e| e.0).max().unwrap_or(0) as usize;
        let max_j = self.terms.keys().map(|e| e.1).max().unwrap_or(0) as usize;
        let powers = |x: &Rational, n: usize| {
            let mut v = Vec::with_capacity(n + 1);
            v.push(Rational::one());
            for i in 0..n {
                let next = &v[i] * x;
                v.push(next);
            }
            v
        };
        let p1 = powers(k1, max_i);
        let p2 = powers(k2, max_j);
        self.terms
            .iter()
            .map(|((i, j), c)| c * &p1[*i as usize] * &p2[*j as usize])
            .fold(Rational::zero(), |acc, x| acc + x)
    }

    /// Leading term under lex order with `k1 > k2`.
    fn leading(&self) -> Option<(&Exponent, &Rational)> {
        self.terms.iter().next_back()
    }

    fn add_term(&mut self, exp: Exponent, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }
}

impl Zero for BiPoly {
    fn zero() -> Self {
        BiPoly::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for BiPoly {
    fn one() -> Self {
        BiPoly::constant(Rational::one())
    }
}

impl<'a> Add<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &'a BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &'a BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl<'a> Mul<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &'a BiPoly) -> BiPoly {
        let mut out = BiPoly::default();
        for ((i1, j1), a) in &self.terms {
            for ((i2, j2), b) in &rhs.terms {
                out.add_term((i1 + i2, j1 + j2), a * b);
            }
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Add for BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: BiPoly) -> BiPoly {
        &self + &rhs
    }
}

impl Sub for BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: BiPoly) -> BiPoly {
        &self - &rhs
    }
}

impl Mul for BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: BiPoly) -> BiPoly {
        &self * &rhs
    }
}

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        -&self
    }
}

impl Ring for BiPoly {
    /// Multivariate division by leading terms; `None` unless the remainder
    /// vanishes.
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (&(di, dj), dc) = divisor.leading()?;
        let dc_inv = dc.recip();
        let mut rem = self.clone();
        let mut quot = BiPoly::default();
        while let Some((&(ri, rj), rc)) = rem.leading() {
            if ri < di || rj < dj {
                return None;
            }
            let t = BiPoly::term(rc * &dc_inv, (ri - di, rj - dj));
            rem = &rem - &(&t * divisor);
            quot = &quot + &t;
        }
        Some(quot)
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        // Graded order, constant first: 169 + 65*k1 - 18*k2
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by_key(|((i, j), _)| (i + j, std::cmp::Reverse(*i)));
        for (n, ((i, j), c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (n, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mut factors = Vec::new();
            if !mag.is_one() || (*i == 0 && *j == 0) {
                factors.push(mag.to_string());
            }
            for (name, e) in [("k1", *i), ("k2", *j)] {
                match e {
                    0 => {}
                    1 => factors.push(name.to_string()),
                    _ => factors.push(format!("{name}^{e}")),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rational::int;

    fn g_nn1() -> BiPoly {
        // -13 k1 - k2 - 5 k1^2 + k1 k2
        BiPoly::from_terms([
            ((1, 0), int(-13)),
            ((0, 1), int(-1)),
            ((2, 0), int(-5)),
            ((1, 1), int(1)),
        ])
    }

    #[test]
    fn evaluates_exactly() {
        assert_eq!(g_nn1().eval(&int(1), &int(20)), int(-18));
    }

    #[test]
    fn no_zero_terms_stored() {
        let p = &BiPoly::k1() - &BiPoly::k1();
        assert!(p.is_zero());
        assert_eq!(p.num_terms(), 0);
        assert_eq!(BiPoly::affine(&int(0), &int(3), &int(0)).num_terms(), 1);
    }

    #[test]
    fn exact_division_roundtrip() {
        let g = g_nn1();
        let l = BiPoly::k2();
        let prod = &(&l * &g) * &g;
        assert_eq!(prod.div_exact(&g).unwrap(), &l * &g);
        assert_eq!(prod.div_exact(&(&l * &g)).unwrap(), g);
        assert!(g.div_exact(&BiPoly::k2()).is_none());
        assert!(g.div_exact(&BiPoly::zero()).is_none());
    }

    #[test]
    fn display_graded() {
        let p = BiPoly::affine(&int(169), &int(65), &int(-18));
        assert_eq!(p.to_string(), "169 + 65*k1 - 18*k2");
        assert_eq!(g_nn1().to_string(), "-13*k1 - k2 - 5*k1^2 + k1*k2");
    }
}
