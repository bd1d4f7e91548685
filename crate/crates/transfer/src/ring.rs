//! Exact coefficient rings: integers, rationals, and integers modulo n.

use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};

use crate::error::{Error, Result};

/// A commutative ring with unity, selectable at runtime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Ring {
    Int,
    Rat,
    /// Integers modulo n, n >= 2 (n = 2 gives the two-element field).
    Mod(u64),
}

/// A ring element; the variant always matches the ring that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Coeff {
    Int(BigInt),
    Rat(BigRational),
    Mod(u64),
}

impl Ring {
    pub fn parse_name(s: &str) -> Result<Ring> {
        match s {
            "int" => Ok(Ring::Int),
            "rat" => Ok(Ring::Rat),
            _ => {
                if let Some(n) = s.strip_prefix("mod:") {
                    let n: u64 = n.parse().map_err(|_| Error::Parse {
                        location: "ring".into(),
                        message: format!("bad modulus {n:?}"),
                    })?;
                    if n < 2 {
                        return Err(Error::Parse {
                            location: "ring".into(),
                            message: "modulus must be at least 2".into(),
                        });
                    }
                    Ok(Ring::Mod(n))
                } else {
                    Err(Error::Parse {
                        location: "ring".into(),
                        message: format!("unknown ring {s:?} (expected int, rat, or mod:<n>)"),
                    })
                }
            }
        }
    }

    pub fn zero(&self) -> Coeff {
        self.from_i64(0)
    }

    pub fn one(&self) -> Coeff {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Coeff {
        match self {
            Ring::Int => Coeff::Int(BigInt::from(v)),
            Ring::Rat => Coeff::Rat(BigRational::from_integer(BigInt::from(v))),
            Ring::Mod(n) => Coeff::Mod((v as i128).rem_euclid(*n as i128) as u64),
        }
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (Ring::Int, Coeff::Int(x), Coeff::Int(y)) => Coeff::Int(x + y),
            (Ring::Rat, Coeff::Rat(x), Coeff::Rat(y)) => Coeff::Rat(x + y),
            (Ring::Mod(n), Coeff::Mod(x), Coeff::Mod(y)) => {
                Coeff::Mod(((*x as u128 + *y as u128) % *n as u128) as u64)
            }
            _ => panic!("coefficient does not belong to this ring"),
        }
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        match (self, a) {
            (Ring::Int, Coeff::Int(x)) => Coeff::Int(-x),
            (Ring::Rat, Coeff::Rat(x)) => Coeff::Rat(-x),
            (Ring::Mod(n), Coeff::Mod(x)) => Coeff::Mod((n - x % n) % n),
            _ => panic!("coefficient does not belong to this ring"),
        }
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (self, a, b) {
            (Ring::Int, Coeff::Int(x), Coeff::Int(y)) => Coeff::Int(x * y),
            (Ring::Rat, Coeff::Rat(x), Coeff::Rat(y)) => Coeff::Rat(x * y),
            (Ring::Mod(n), Coeff::Mod(x), Coeff::Mod(y)) => {
                Coeff::Mod(((*x as u128 * *y as u128) % *n as u128) as u64)
            }
            _ => panic!("coefficient does not belong to this ring"),
        }
    }

    pub fn is_zero(&self, a: &Coeff) -> bool {
        match a {
            Coeff::Int(x) => x.is_zero(),
            Coeff::Rat(x) => x.is_zero(),
            Coeff::Mod(x) => *x == 0,
        }
    }

    /// Exact unit test: +-1 over the integers, nonzero over the rationals,
    /// coprime to n modulo n.
    pub fn is_unit(&self, a: &Coeff) -> bool {
        match (self, a) {
            (Ring::Int, Coeff::Int(x)) => x.abs().is_one(),
            (Ring::Rat, Coeff::Rat(x)) => !x.is_zero(),
            (Ring::Mod(n), Coeff::Mod(x)) => x.gcd(n) == 1,
            _ => panic!("coefficient does not belong to this ring"),
        }
    }

    /// Exact division; `None` when b does not divide a in this ring.
    pub fn div(&self, a: &Coeff, b: &Coeff) -> Option<Coeff> {
        match (self, a, b) {
            (Ring::Int, Coeff::Int(x), Coeff::Int(y)) => {
                if y.is_zero() {
                    return None;
                }
                let (q, r) = x.div_rem(y);
                r.is_zero().then_some(Coeff::Int(q))
            }
            (Ring::Rat, Coeff::Rat(x), Coeff::Rat(y)) => {
                (!y.is_zero()).then(|| Coeff::Rat(x / y))
            }
            (Ring::Mod(n), Coeff::Mod(x), Coeff::Mod(y)) => {
                mod_inverse(*y, *n).map(|inv| self.mul(&Coeff::Mod(*x), &Coeff::Mod(inv)))
            }
            _ => panic!("coefficient does not belong to this ring"),
        }
    }

    pub fn render(&self, a: &Coeff) -> String {
        match a {
            Coeff::Int(x) => x.to_string(),
            Coeff::Rat(x) => {
                if x.denom().is_one() {
                    x.numer().to_string()
                } else {
                    format!("{}/{}", x.numer(), x.denom())
                }
            }
            Coeff::Mod(x) => x.to_string(),
        }
    }

    /// Parse an integer or `p/q` fraction into this ring.
    pub fn parse(&self, s: &str) -> Result<Coeff> {
        let bad = |msg: String| Error::Parse { location: "coefficient".into(), message: msg };
        let (num_str, den_str) = match s.split_once('/') {
            Some((p, q)) => (p.trim(), Some(q.trim())),
            None => (s.trim(), None),
        };
        let num: BigInt = num_str
            .parse()
            .map_err(|_| bad(format!("bad integer {num_str:?}")))?;
        match (self, den_str) {
            (Ring::Rat, Some(d)) => {
                let den: BigInt = d.parse().map_err(|_| bad(format!("bad integer {d:?}")))?;
                if den.is_zero() {
                    return Err(bad("zero denominator".into()));
                }
                Ok(Coeff::Rat(BigRational::new(num, den)))
            }
            (_, Some(_)) => Err(bad("fractional coefficients need the rational ring".into())),
            (Ring::Rat, None) => Ok(Coeff::Rat(BigRational::from_integer(num))),
            (Ring::Int, None) => Ok(Coeff::Int(num)),
            (Ring::Mod(n), None) => {
                let m = BigInt::from(*n);
                let r = ((num % &m) + &m) % &m;
                Ok(Coeff::Mod(u64::try_from(r).expect("reduced residue fits u64")))
            }
        }
    }
}

fn mod_inverse(a: u64, n: u64) -> Option<u64> {
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (n as i128, (a % n) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    if r != 1 {
        return None;
    }
    Some(t.rem_euclid(n as i128) as u64)
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Int => write!(f, "int"),
            Ring::Rat => write!(f, "rat"),
            Ring::Mod(n) => write!(f, "mod:{n}"),
        }
    }
}
