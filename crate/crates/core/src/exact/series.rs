//! Truncated formal power series in Φ with polynomial coefficients.
//!
//! A [`SeriesPhi`] of order N stores exactly the coefficients of Φ^0..Φ^N,
//! each a [`PolyX`]. Every binary operation truncates to the minimum of the
//! operand orders, so a result always records how far it is trustworthy and
//! equality of truncated series is well defined.

use super::poly::PolyX;
use super::rat::Rat;
use crate::error::Error;
use num_bigint::BigInt;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SeriesPhi {
    order: usize,
    coeffs: Vec<PolyX>,
}

impl SeriesPhi {
    /// The zero series of the given truncation order.
    pub fn zero(order: usize) -> Self {
        SeriesPhi {
            order,
            coeffs: vec![PolyX::zero(); order + 1],
        }
    }

    /// The constant series 1.
    pub fn one(order: usize) -> Self {
        let mut s = SeriesPhi::zero(order);
        s.coeffs[0] = PolyX::one();
        s
    }

    /// Build from Φ-coefficients in ascending order, padding with zero
    /// polynomials up to `order`. Panics if more than `order + 1` are given.
    pub fn from_coeffs(order: usize, mut coeffs: Vec<PolyX>) -> Self {
        assert!(
            coeffs.len() <= order + 1,
            "SeriesPhi::from_coeffs: {} coefficients exceed order {}",
            coeffs.len(),
            order
        );
        coeffs.resize(order + 1, PolyX::zero());
        SeriesPhi { order, coeffs }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficient of Φ^k. Panics beyond the truncation order, where the
    /// series carries no information.
    pub fn coeff(&self, k: usize) -> &PolyX {
        assert!(k <= self.order, "SeriesPhi::coeff: Φ^{k} beyond order {}", self.order);
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[PolyX] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(PolyX::is_zero)
    }

    /// Drop coefficients above `order` (which must not exceed the current one).
    pub fn truncate(&self, order: usize) -> SeriesPhi {
        assert!(order <= self.order, "SeriesPhi::truncate: cannot extend order");
        SeriesPhi {
            order,
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn scalar_mul(&self, c: &Rat) -> SeriesPhi {
        SeriesPhi {
            order: self.order,
            coeffs: self.coeffs.iter().map(|p| p.scalar_mul(c)).collect(),
        }
    }

    /// Multiply every Φ-coefficient by the polynomial `p` (multiplication by
    /// an element of the coefficient ring, not by a series).
    pub fn mul_poly(&self, p: &PolyX) -> SeriesPhi {
        SeriesPhi {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * p).collect(),
        }
    }

    /// The series log(1/(1-Φ)) = Σ_{k≥1} Φ^k / k, truncated to `order`.
    pub fn log_inv(order: usize) -> SeriesPhi {
        let mut coeffs = vec![PolyX::zero()];
        for k in 1..=order {
            coeffs.push(PolyX::constant(Rat::new(1, k as i64)));
        }
        SeriesPhi { order, coeffs }
    }

    /// Exponential Σ_{m≥0} self^m / m!, truncated to the operand's order.
    ///
    /// Requires a zero constant term; the m-th power then starts at Φ^m, so
    /// the truncated sum is finite and exact through Φ^order.
    pub fn exp(&self) -> Result<SeriesPhi, Error> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::ExpNonzeroConstantTerm(self.coeffs[0].to_string()));
        }
        let mut acc = SeriesPhi::one(self.order);
        let mut term = SeriesPhi::one(self.order);
        for m in 1..=self.order {
            term = &(&term * self) * &SeriesPhi::one(self.order).scalar_mul(&Rat::new(1, m as i64));
            acc = &acc + &term;
        }
        Ok(acc)
    }

    /// The binomial series (1-Φ)^{-s} = Σ_k binom(s+k-1, k) Φ^k for an
    /// integer exponent s ≥ 1; all coefficients are constant polynomials.
    pub fn binomial_power_int(s: u32, order: usize) -> SeriesPhi {
        assert!(s >= 1, "binomial_power_int: exponent must be >= 1");
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut c = BigInt::from(1);
        coeffs.push(PolyX::one());
        for k in 1..=order {
            // binom(s+k-1, k) = binom(s+k-2, k-1) * (s+k-1) / k, exact at each step
            c = c * BigInt::from(s as usize + k - 1) / BigInt::from(k);
            coeffs.push(PolyX::constant(Rat::from(c.clone())));
        }
        SeriesPhi { order, coeffs }
    }

    /// The binomial series with the symbolic exponent X:
    /// (1-Φ)^{-X} = Σ_k binom(X+k-1, k) Φ^k, each coefficient a degree-k
    /// polynomial in X.
    pub fn binomial_power_sym(order: usize) -> SeriesPhi {
        let coeffs = (0..=order)
            .map(|k| PolyX::binomial(k as i64 - 1, k))
            .collect();
        SeriesPhi { order, coeffs }
    }
}

impl Add for &SeriesPhi {
    type Output = SeriesPhi;
    fn add(self, rhs: &SeriesPhi) -> SeriesPhi {
        let order = self.order.min(rhs.order);
        let coeffs = (0..=order)
            .map(|k| &self.coeffs[k] + &rhs.coeffs[k])
            .collect();
        SeriesPhi { order, coeffs }
    }
}

impl Sub for &SeriesPhi {
    type Output = SeriesPhi;
    fn sub(self, rhs: &SeriesPhi) -> SeriesPhi {
        let order = self.order.min(rhs.order);
        let coeffs = (0..=order)
            .map(|k| &self.coeffs[k] - &rhs.coeffs[k])
            .collect();
        SeriesPhi { order, coeffs }
    }
}

impl Mul for &SeriesPhi {
    type Output = SeriesPhi;
    fn mul(self, rhs: &SeriesPhi) -> SeriesPhi {
        let order = self.order.min(rhs.order);
        let mut coeffs = vec![PolyX::zero(); order + 1];
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(order - i) {
                if rhs.coeffs[j].is_zero() {
                    continue;
                }
                coeffs[i + j] = &coeffs[i + j] + &(&self.coeffs[i] * &rhs.coeffs[j]);
            }
        }
        SeriesPhi { order, coeffs }
    }
}

impl Neg for &SeriesPhi {
    type Output = SeriesPhi;
    fn neg(self) -> SeriesPhi {
        SeriesPhi {
            order: self.order,
            coeffs: self.coeffs.iter().map(|p| -p).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for SeriesPhi {
            type Output = SeriesPhi;
            fn $method(self, rhs: SeriesPhi) -> SeriesPhi {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

/// Rendered as the list of Φ-coefficients (each a polynomial coefficient
/// list), ascending: `[[...], [...], ...]` with order + 1 entries.
impl fmt::Display for SeriesPhi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, p) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, "]")
    }
}
