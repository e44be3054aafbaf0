use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn times(self, other: Sign) -> Sign {
        if self == other {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// A signed power of `q`, `±q^exp`.
///
/// These are the only values allowed as Pochhammer arguments and theta
/// parameters, so every product stays a series in one integer-graded variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Monomial {
    pub sign: Sign,
    pub exp: i64,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { sign: Sign::Plus, exp: 0 };

    pub fn new(sign: Sign, exp: i64) -> Self {
        Monomial { sign, exp }
    }

    /// `q^exp`
    pub fn q(exp: i64) -> Self {
        Monomial { sign: Sign::Plus, exp }
    }

    /// `-q^exp`
    pub fn neg_q(exp: i64) -> Self {
        Monomial { sign: Sign::Minus, exp }
    }

    pub fn is_one(self) -> bool {
        self == Monomial::ONE
    }

    pub fn product(self, other: Monomial) -> Monomial {
        Monomial { sign: self.sign.times(other.sign), exp: self.exp + other.exp }
    }

    /// Multiplies by `q^e`.
    pub fn shift(self, e: i64) -> Monomial {
        Monomial { sign: self.sign, exp: self.exp + e }
    }

    pub fn pow(self, k: i64) -> Monomial {
        let sign = if k.rem_euclid(2) == 1 { self.sign } else { Sign::Plus };
        Monomial { sign, exp: self.exp * k }
    }

    pub fn recip(self) -> Monomial {
        Monomial { sign: self.sign, exp: -self.exp }
    }

    pub fn negate(self) -> Monomial {
        Monomial { sign: self.sign.flip(), exp: self.exp }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign == Sign::Minus {
            f.write_str("-")?;
        }
        match self.exp {
            0 => f.write_str("1"),
            1 => f.write_str("q"),
            e => write!(f, "q^{e}"),
        }
    }
}
