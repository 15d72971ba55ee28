//! Exact integer Laurent polynomials in one variable (`z`) and two variables
//! (`a`, `z`).
//!
//! Coefficients are `i64` and stored sparsely in canonical form: zero
//! coefficients are never kept, so structural equality is polynomial equality.

use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Laurent polynomial in `z`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize)]
pub struct Laurent1 {
    coeffs: BTreeMap<i32, i64>,
}

impl Laurent1 {
    pub fn zero() -> Self {
        Laurent1::default()
    }

    pub fn one() -> Self {
        Laurent1::monomial(0, 1)
    }

    pub fn monomial(exp: i32, coeff: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if coeff != 0 {
            coeffs.insert(exp, coeff);
        }
        Laurent1 { coeffs }
    }

    pub fn from_terms(terms: &[(i32, i64)]) -> Self {
        let mut p = Laurent1::zero();
        for &(e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: i32) -> i64 {
        self.coeffs.get(&exp).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn add_term(&mut self, exp: i32, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let slot = self.coeffs.entry(exp).or_insert(0);
        *slot += coeff;
        if *slot == 0 {
            self.coeffs.remove(&exp);
        }
    }

    /// Multiplication by a monomial, in place.
    pub fn shift(&self, exp: i32, coeff: i64) -> Laurent1 {
        let mut out = Laurent1::zero();
        for (e, c) in self.terms() {
            out.add_term(e + exp, c * coeff);
        }
        out
    }

    /// z -> -z.
    pub fn negate_var(&self) -> Laurent1 {
        let mut out = Laurent1::zero();
        for (e, c) in self.terms() {
            out.add_term(e, if e.rem_euclid(2) == 1 { -c } else { c });
        }
        out
    }

    /// True when only even powers of z appear.
    pub fn even_powers_only(&self) -> bool {
        self.coeffs.keys().all(|e| e.rem_euclid(2) == 0)
    }

    /// Serializes as a `poly v1` block with sorted exponents.
    pub fn serialize(&self) -> String {
        let mut out = String::from("poly v1\n");
        if self.is_zero() {
            out.push_str("zero\n");
        }
        for (e, c) in self.terms() {
            out.push_str(&format!("z^{e}: {c}\n"));
        }
        out
    }
}

impl fmt::Display for Laurent1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            let mag = c.abs();
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (mag, e) {
                (_, 0) => write!(f, "{mag}")?,
                (1, 1) => write!(f, "z")?,
                (1, _) => write!(f, "z^{e}")?,
                (_, 1) => write!(f, "{mag} z")?,
                (_, _) => write!(f, "{mag} z^{e}")?,
            }
        }
        Ok(())
    }
}

/// Laurent polynomial in `a` and `z`, exponents ordered (a, z).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize)]
pub struct Laurent2 {
    coeffs: BTreeMap<(i32, i32), i64>,
}

impl Laurent2 {
    pub fn zero() -> Self {
        Laurent2::default()
    }

    pub fn one() -> Self {
        Laurent2::monomial(0, 0, 1)
    }

    pub fn monomial(a: i32, z: i32, coeff: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if coeff != 0 {
            coeffs.insert((a, z), coeff);
        }
        Laurent2 { coeffs }
    }

    pub fn from_terms(terms: &[(i32, i32, i64)]) -> Self {
        let mut p = Laurent2::zero();
        for &(a, z, c) in terms {
            p.add_term(a, z, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, a: i32, z: i32) -> i64 {
        self.coeffs.get(&(a, z)).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, i32, i64)> + '_ {
        self.coeffs.iter().map(|(&(a, z), &c)| (a, z, c))
    }

    pub fn add_term(&mut self, a: i32, z: i32, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let slot = self.coeffs.entry((a, z)).or_insert(0);
        *slot += coeff;
        if *slot == 0 {
            self.coeffs.remove(&(a, z));
        }
    }

    /// Multiplication by `c * a^i z^j`.
    pub fn shift(&self, a: i32, z: i32, coeff: i64) -> Laurent2 {
        let mut out = Laurent2::zero();
        for (ea, ez, c) in self.terms() {
            out.add_term(ea + a, ez + z, c * coeff);
        }
        out
    }

    /// Largest exponent of `a` appearing with a nonzero coefficient.
    pub fn max_a_degree(&self) -> Option<i32> {
        self.coeffs.keys().map(|&(a, _)| a).max()
    }

    pub fn min_a_degree(&self) -> Option<i32> {
        self.coeffs.keys().map(|&(a, _)| a).min()
    }

    /// a -> a^{-1}.
    pub fn invert_a(&self) -> Laurent2 {
        let mut out = Laurent2::zero();
        for (a, z, c) in self.terms() {
            out.add_term(-a, z, c);
        }
        out
    }

    /// z -> -z.
    pub fn negate_z(&self) -> Laurent2 {
        let mut out = Laurent2::zero();
        for (a, z, c) in self.terms() {
            out.add_term(a, z, if z.rem_euclid(2) == 1 { -c } else { c });
        }
        out
    }

    /// Serializes as a `poly v1` block: `a^i z^j: c` lines, sorted.
    pub fn serialize(&self) -> String {
        let mut out = String::from("poly v1\n");
        if self.is_zero() {
            out.push_str("zero\n");
        }
        for (a, z, c) in self.terms() {
            out.push_str(&format!("a^{a} z^{z}: {c}\n"));
        }
        out
    }
}

macro_rules! impl_ring_ops {
    ($ty:ty) => {
        impl Add for &$ty {
            type Output = $ty;
            fn add(self, rhs: &$ty) -> $ty {
                let mut out = self.clone();
                for (k, c) in rhs.coeffs.iter() {
                    let slot = out.coeffs.entry(*k).or_insert(0);
                    *slot += c;
                    if *slot == 0 {
                        out.coeffs.remove(k);
                    }
                }
                out
            }
        }
        impl Sub for &$ty {
            type Output = $ty;
            fn sub(self, rhs: &$ty) -> $ty {
                self + &(-rhs)
            }
        }
        impl Neg for &$ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                let mut out = self.clone();
                for c in out.coeffs.values_mut() {
                    *c = -*c;
                }
                out
            }
        }
        impl Add for $ty {
            type Output = $ty;
            fn add(self, rhs: $ty) -> $ty {
                &self + &rhs
            }
        }
        impl Sub for $ty {
            type Output = $ty;
            fn sub(self, rhs: $ty) -> $ty {
                &self - &rhs
            }
        }
        impl Neg for $ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                -&self
            }
        }
        impl Mul for $ty {
            type Output = $ty;
            fn mul(self, rhs: $ty) -> $ty {
                &self * &rhs
            }
        }
    };
}

impl Mul for &Laurent1 {
    type Output = Laurent1;
    fn mul(self, rhs: &Laurent1) -> Laurent1 {
        let mut out = Laurent1::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for &Laurent2 {
    type Output = Laurent2;
    fn mul(self, rhs: &Laurent2) -> Laurent2 {
        let mut out = Laurent2::zero();
        for (a1, z1, c1) in self.terms() {
            for (a2, z2, c2) in rhs.terms() {
                out.add_term(a1 + a2, z1 + z2, c1 * c2);
            }
        }
        out
    }
}

impl_ring_ops!(Laurent1);
impl_ring_ops!(Laurent2);

impl fmt::Display for Laurent2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (a, z, c) in self.terms() {
            let mag = c.abs();
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut printed = false;
            if mag != 1 || (a == 0 && z == 0) {
                write!(f, "{mag}")?;
                printed = true;
            }
            for (name, e) in [("a", a), ("z", z)] {
                if e != 0 {
                    if printed {
                        write!(f, " ")?;
                    }
                    if e == 1 {
                        write!(f, "{name}")?;
                    } else {
                        write!(f, "{name}^{e}")?;
                    }
                    printed = true;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_drops_zeros() {
        let p = Laurent1::from_terms(&[(2, 1), (2, -1), (0, 3)]);
        assert_eq!(p, Laurent1::monomial(0, 3));
        assert!(Laurent1::from_terms(&[(1, 1), (1, -1)]).is_zero());
    }

    #[test]
    fn one_var_arithmetic() {
        // (1 + z)(1 - z) = 1 - z^2
        let a = Laurent1::from_terms(&[(0, 1), (1, 1)]);
        let b = Laurent1::from_terms(&[(0, 1), (1, -1)]);
        assert_eq!(&a * &b, Laurent1::from_terms(&[(0, 1), (2, -1)]));
        // z^{-1} * z = 1
        assert_eq!(
            &Laurent1::monomial(-1, 1) * &Laurent1::monomial(1, 1),
            Laurent1::one()
        );
    }

    #[test]
    fn two_var_arithmetic() {
        let delta = Laurent2::from_terms(&[(1, -1, 1), (-1, -1, -1), (0, 0, 1)]);
        let z = Laurent2::monomial(0, 1, 1);
        // z * delta = a - a^{-1} + z
        assert_eq!(
            &z * &delta,
            Laurent2::from_terms(&[(1, 0, 1), (-1, 0, -1), (0, 1, 1)])
        );
        assert_eq!(delta.max_a_degree(), Some(1));
        assert_eq!(delta.min_a_degree(), Some(-1));
    }

    #[test]
    fn variable_substitutions() {
        let p = Laurent2::from_terms(&[(2, 1, 3), (-1, 2, -4)]);
        assert_eq!(
            p.invert_a(),
            Laurent2::from_terms(&[(-2, 1, 3), (1, 2, -4)])
        );
        assert_eq!(
            p.negate_z(),
            Laurent2::from_terms(&[(2, 1, -3), (-1, 2, -4)])
        );
        let q = Laurent1::from_terms(&[(1, 2), (2, 5)]);
        assert_eq!(q.negate_var(), Laurent1::from_terms(&[(1, -2), (2, 5)]));
    }

    #[test]
    fn display_and_block_form() {
        let p = Laurent1::from_terms(&[(0, 1), (2, 1)]);
        assert_eq!(p.to_string(), "1 + z^2");
        assert_eq!(p.serialize(), "poly v1\nz^0: 1\nz^2: 1\n");
        let q = Laurent2::from_terms(&[(-2, 0, -1), (0, 2, 1)]);
        assert_eq!(q.serialize(), "poly v1\na^-2 z^0: -1\na^0 z^2: 1\n");
    }
}
