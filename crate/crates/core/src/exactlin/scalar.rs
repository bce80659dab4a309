//! Exact field elements: arbitrary-precision rationals and prime-field residues.
//!
//! All arithmetic in the engine goes through [`Scalar`] so that every rank,
//! dimension and basis the pipeline reports is exact. Mixing elements of
//! different fields is a programming error and panics.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Which exact field computations run over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldKind {
    /// Rational numbers with arbitrary-precision integers.
    Q,
    /// Integers modulo an odd prime `p` (must fit in 31 bits so products fit u64).
    Fp(u64),
}

impl FieldKind {
    pub fn zero(self) -> Scalar {
        match self {
            FieldKind::Q => Scalar::Q(BigRational::zero()),
            FieldKind::Fp(p) => Scalar::Fp { v: 0, p },
        }
    }

    pub fn one(self) -> Scalar {
        match self {
            FieldKind::Q => Scalar::Q(BigRational::one()),
            FieldKind::Fp(p) => Scalar::Fp { v: 1 % p, p },
        }
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            FieldKind::Q => Scalar::Q(BigRational::from(BigInt::from(n))),
            FieldKind::Fp(p) => {
                let r = n.rem_euclid(p as i64) as u64;
                Scalar::Fp { v: r, p }
            }
        }
    }

    /// Parses `"q"` or `"fp:<prime>"`.
    pub fn parse(s: &str) -> Result<FieldKind, String> {
        if s == "q" {
            return Ok(FieldKind::Q);
        }
        if let Some(rest) = s.strip_prefix("fp:") {
            let p: u64 = rest
                .parse()
                .map_err(|_| format!("invalid prime in field spec `{s}`"))?;
            if p < 2 || p >= (1 << 31) {
                return Err(format!("prime {p} out of supported range"));
            }
            if !is_prime_u64(p) {
                return Err(format!("{p} is not prime"));
            }
            return Ok(FieldKind::Fp(p));
        }
        Err(format!("unknown field spec `{s}` (expected `q` or `fp:<p>`)"))
    }
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Q => write!(f, "q"),
            FieldKind::Fp(p) => write!(f, "fp:{p}"),
        }
    }
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field element.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    Fp { v: u64, p: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldKind {
        match self {
            Scalar::Q(_) => FieldKind::Q,
            Scalar::Fp { p, .. } => FieldKind::Fp(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_zero(),
            Scalar::Fp { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_one(),
            Scalar::Fp { v, p } => *v == 1 % *p,
        }
    }

    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Q(r) => {
                assert!(!r.is_zero(), "division by zero");
                Scalar::Q(r.recip())
            }
            Scalar::Fp { v, p } => {
                assert!(*v != 0, "division by zero");
                Scalar::Fp {
                    v: fp_pow(*v, *p - 2, *p),
                    p: *p,
                }
            }
        }
    }
}

fn fp_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident, $qop:expr, $fpop:expr) => {
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q($qop(a, b)),
                    (Scalar::Fp { v: a, p }, Scalar::Fp { v: b, p: q }) => {
                        assert_eq!(p, q, "mixed prime fields");
                        Scalar::Fp { v: $fpop(a, b, p), p }
                    }
                    _ => panic!("mixed field arithmetic"),
                }
            }
        }
        impl<'a> $trait<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                self.clone().$method(rhs.clone())
            }
        }
    };
}

scalar_binop!(Add, add, |a: BigRational, b| a + b, |a, b, p| (a + b) % p);
scalar_binop!(Sub, sub, |a: BigRational, b| a - b, |a: u64, b: u64, p: u64| (a + p - b) % p);
scalar_binop!(Mul, mul, |a: BigRational, b| a * b, |a, b, p| a * b % p);

impl Div for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        self * rhs.inv()
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(r) => Scalar::Q(-r),
            Scalar::Fp { v, p } => Scalar::Fp { v: (p - v) % p, p },
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Fp { v, .. } => write!(f, "{v}"),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Scalar {
    /// Absolute-value numerator+denominator size, used only by tests probing
    /// coefficient growth.
    pub fn q_bits(&self) -> usize {
        match self {
            Scalar::Q(r) => (r.numer().abs().bits() + r.denom().bits()) as usize,
            Scalar::Fp { .. } => 64,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_exactness() {
        let f = FieldKind::Q;
        let a = f.from_i64(3) / f.from_i64(7);
        let b = f.from_i64(7) / f.from_i64(3);
        assert!((a * b).is_one());
    }

    #[test]
    fn fp_inverse_roundtrip() {
        let f = FieldKind::Fp(32003);
        for n in [1i64, 2, 17, 32002, 12345] {
            let a = f.from_i64(n);
            assert!((a.clone() * a.inv()).is_one());
        }
    }

    #[test]
    fn field_parse() {
        assert_eq!(FieldKind::parse("q").unwrap(), FieldKind::Q);
        assert_eq!(FieldKind::parse("fp:32003").unwrap(), FieldKind::Fp(32003));
        assert!(FieldKind::parse("fp:32004").is_err());
        assert!(FieldKind::parse("r").is_err());
    }
}
