//! Dense univariate polynomials over [`Rat`] in the formal variable X.
//!
//! Coefficients are stored in ascending degree order: `coeffs[k]` is the
//! coefficient of X^k. The representation is canonical: the vector is empty
//! for the zero polynomial and otherwise ends in a nonzero coefficient, so
//! structural equality is exact polynomial equality.

use super::rat::Rat;
use num_bigint::BigInt;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyX {
    coeffs: Vec<Rat>,
}

fn factorial(k: usize) -> BigInt {
    let mut acc = BigInt::from(1);
    for j in 2..=k {
        acc *= BigInt::from(j);
    }
    acc
}

impl PolyX {
    /// The zero polynomial (empty coefficient list; its degree is `None`).
    pub fn zero() -> Self {
        PolyX { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        PolyX {
            coeffs: vec![Rat::one()],
        }
    }

    /// The indeterminate X.
    pub fn x() -> Self {
        PolyX {
            coeffs: vec![Rat::zero(), Rat::one()],
        }
    }

    /// A constant polynomial (zero polynomial if `c` is zero).
    pub fn constant(c: Rat) -> Self {
        PolyX::from_coeffs(vec![c])
    }

    /// The monomial `c * X^k` (zero polynomial if `c` is zero).
    pub fn monomial(c: Rat, k: usize) -> Self {
        if c.is_zero() {
            return PolyX::zero();
        }
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = c;
        PolyX { coeffs }
    }

    /// Build from coefficients in ascending degree order; trailing zeros are
    /// stripped to restore the canonical form.
    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        let mut p = PolyX { coeffs };
        p.normalize();
        p
    }

    /// Convenience constructor from integer coefficients, ascending order.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        PolyX::from_coeffs(coeffs.iter().map(|&c| Rat::from(c)).collect())
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Rat::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of X^k (zero beyond the stored degree).
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Evaluate at `x` by Horner's rule.
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn scalar_mul(&self, c: &Rat) -> PolyX {
        if c.is_zero() {
            return PolyX::zero();
        }
        PolyX {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Divide every coefficient by `c`. Panics if `c` is zero.
    pub fn scalar_div(&self, c: &Rat) -> PolyX {
        assert!(!c.is_zero(), "PolyX::scalar_div: division by zero");
        PolyX {
            coeffs: self.coeffs.iter().map(|a| a / c).collect(),
        }
    }

    /// Substitute X := X + c, i.e. return p(X + c).
    ///
    /// Horner over the linear factor: fold the coefficients from the top,
    /// multiplying the accumulator by (X + c) at each step.
    pub fn shift_x(&self, c: &Rat) -> PolyX {
        let linear = PolyX::from_coeffs(vec![c.clone(), Rat::one()]);
        let mut acc = PolyX::zero();
        for a in self.coeffs.iter().rev() {
            acc = &(&acc * &linear) + &PolyX::constant(a.clone());
        }
        acc
    }

    /// The binomial-coefficient polynomial `binom(X + shift, k)`, i.e.
    ///
    ///   prod_{j=0}^{k-1} (X + shift - j) / k!
    ///
    /// of exact degree k (the constant 1 for k = 0).
    pub fn binomial(shift: i64, k: usize) -> PolyX {
        let mut acc = PolyX::one();
        for j in 0..k {
            let offset = Rat::from(shift - j as i64);
            let factor = PolyX::from_coeffs(vec![offset, Rat::one()]);
            acc = &acc * &factor;
        }
        acc.scalar_div(&Rat::from(factorial(k)))
    }
}

impl Add for &PolyX {
    type Output = PolyX;
    fn add(self, rhs: &PolyX) -> PolyX {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) + rhs.coeff(k));
        }
        PolyX::from_coeffs(coeffs)
    }
}

impl Sub for &PolyX {
    type Output = PolyX;
    fn sub(self, rhs: &PolyX) -> PolyX {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) - rhs.coeff(k));
        }
        PolyX::from_coeffs(coeffs)
    }
}

impl Mul for &PolyX {
    type Output = PolyX;
    fn mul(self, rhs: &PolyX) -> PolyX {
        if self.is_zero() || rhs.is_zero() {
            return PolyX::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += &(a * b);
            }
        }
        PolyX::from_coeffs(coeffs)
    }
}

impl Neg for &PolyX {
    type Output = PolyX;
    fn neg(self) -> PolyX {
        PolyX {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for PolyX {
            type Output = PolyX;
            fn $method(self, rhs: PolyX) -> PolyX {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

/// Rendered as the coefficient list in ascending degree order, e.g.
/// `[1/1, 3/2, 1/2]` for 1 + (3/2)X + (1/2)X^2; the zero polynomial is `[]`.
impl fmt::Display for PolyX {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, "]")
    }
}
