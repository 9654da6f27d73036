//! Exact field elements: rationals and residues modulo a prime.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

/// The base field of an instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rational,
    /// Integers modulo a prime. Construct through [`FieldSpec::prime`].
    Prime(u64),
}

impl FieldSpec {
    pub fn prime(modulus: u64) -> Result<Self> {
        if primal_check::miller_rabin(modulus) {
            Ok(FieldSpec::Prime(modulus))
        } else {
            Err(Error::NonPrimeModulus(modulus))
        }
    }

    /// Re-checks a spec that may have been built directly from the enum.
    pub fn validate(self) -> Result<Self> {
        match self {
            FieldSpec::Rational => Ok(self),
            FieldSpec::Prime(p) => FieldSpec::prime(p),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => f.write_str("rational"),
            FieldSpec::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

/// An element of a [`FieldSpec`]. Arithmetic is exact.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Prime { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn zero(field: FieldSpec) -> Self {
        Self::from_i64(field, 0)
    }

    pub fn one(field: FieldSpec) -> Self {
        Self::from_i64(field, 1)
    }

    pub fn from_i64(field: FieldSpec, n: i64) -> Self {
        match field {
            FieldSpec::Rational => Scalar::Rational(BigRational::from_integer(n.into())),
            FieldSpec::Prime(p) => Scalar::Prime {
                value: (n as i128).rem_euclid(p as i128) as u64,
                modulus: p,
            },
        }
    }

    /// `num / den` in the given field. Panics if `den` is zero in that field.
    pub fn ratio(field: FieldSpec, num: i64, den: i64) -> Self {
        match field {
            FieldSpec::Rational => {
                Scalar::Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
            }
            FieldSpec::Prime(_) => {
                let d = Self::from_i64(field, den);
                Self::from_i64(field, num).mul_unchecked(&d.inverse().expect("zero denominator"))
            }
        }
    }

    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rational,
            Scalar::Prime { modulus, .. } => FieldSpec::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Prime { value, .. } => *value == 0,
        }
    }

    fn ensure_same_field(&self, other: &Scalar) -> Result<()> {
        if self.field() == other.field() {
            Ok(())
        } else {
            Err(Error::FieldMismatch {
                expected: self.field(),
                found: other.field(),
            })
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar> {
        self.ensure_same_field(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.ensure_same_field(other)?;
        Ok(self.mul_unchecked(other))
    }

    // Callers guarantee both operands share a field.
    pub(crate) fn add_unchecked(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Prime { value: a, modulus }, Scalar::Prime { value: b, .. }) => {
                let m = *modulus as u128;
                Scalar::Prime {
                    value: ((*a as u128 + *b as u128) % m) as u64,
                    modulus: *modulus,
                }
            }
            _ => unreachable!("field mismatch"),
        }
    }

    pub(crate) fn mul_unchecked(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Prime { value: a, modulus }, Scalar::Prime { value: b, .. }) => {
                Scalar::Prime {
                    value: mul_mod(*a, *b, *modulus),
                    modulus: *modulus,
                }
            }
            _ => unreachable!("field mismatch"),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(-q),
            Scalar::Prime { value, modulus } => Scalar::Prime {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inverse(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            // Fermat: a^(p-2)
            Scalar::Prime { value, modulus } => Scalar::Prime {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    /// Parses the canonical text form: `"p/q"` or an integer for rationals,
    /// a residue in `0..p` for prime fields.
    pub fn parse(text: &str, field: FieldSpec) -> Result<Scalar> {
        let invalid = |reason: &str| Error::InvalidScalar {
            text: text.to_string(),
            field,
            reason: reason.to_string(),
        };
        match field {
            FieldSpec::Rational => {
                let (num, den) = match text.split_once('/') {
                    Some((n, d)) => (n, d),
                    None => (text, "1"),
                };
                let num: BigInt = num.parse().map_err(|_| invalid("bad numerator"))?;
                let den: BigInt = den.parse().map_err(|_| invalid("bad denominator"))?;
                if den.is_zero() {
                    return Err(invalid("zero denominator"));
                }
                Ok(Scalar::Rational(BigRational::new(num, den)))
            }
            FieldSpec::Prime(p) => {
                if text.starts_with('+') {
                    return Err(invalid("expected a plain residue"));
                }
                let value: u64 = text
                    .parse()
                    .map_err(|_| invalid("expected a non-negative integer"))?;
                if value >= p {
                    return Err(invalid("residue must be smaller than the modulus"));
                }
                Ok(Scalar::Prime { value, modulus: p })
            }
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            // Ratio keeps itself reduced with a positive denominator, and
            // prints integers without "/1".
            Scalar::Rational(q) => write!(f, "{q}"),
            Scalar::Prime { value, .. } => write!(f, "{value}"),
        }
    }
}

pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Coefficient storage for a table; one column per field so that prime-field
/// tables cost eight bytes per entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Coefficients {
    Rational(Vec<BigRational>),
    Prime { modulus: u64, values: Vec<u64> },
}

impl Coefficients {
    pub(crate) fn with_capacity(field: FieldSpec, cap: usize) -> Self {
        match field {
            FieldSpec::Rational => Coefficients::Rational(Vec::with_capacity(cap)),
            FieldSpec::Prime(p) => Coefficients::Prime {
                modulus: p,
                values: Vec::with_capacity(cap),
            },
        }
    }

    /// Caller checks the scalar belongs to this column's field.
    pub(crate) fn push(&mut self, c: Scalar) {
        match (self, c) {
            (Coefficients::Rational(v), Scalar::Rational(q)) => v.push(q),
            (Coefficients::Prime { values, .. }, Scalar::Prime { value, .. }) => values.push(value),
            _ => unreachable!("field mismatch"),
        }
    }

    pub(crate) fn get(&self, pos: usize) -> Scalar {
        match self {
            Coefficients::Rational(v) => Scalar::Rational(v[pos].clone()),
            Coefficients::Prime { modulus, values } => Scalar::Prime {
                value: values[pos],
                modulus: *modulus,
            },
        }
    }

    pub(crate) fn permuted(&self, order: &[u32]) -> Self {
        match self {
            Coefficients::Rational(v) => {
                Coefficients::Rational(order.iter().map(|&p| v[p as usize].clone()).collect())
            }
            Coefficients::Prime { modulus, values } => Coefficients::Prime {
                modulus: *modulus,
                values: order.iter().map(|&p| values[p as usize]).collect(),
            },
        }
    }
}
