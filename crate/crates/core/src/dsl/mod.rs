//! A small text language for products of q-Pochhammer symbols.
//!
//! ```text
//! expr     := factor { ("*" | "/") factor } ;
//! factor   := poch [ "^" sint ] | mono ;
//! poch     := "(" mono { "," mono } ";" basemono ")" "_" ( "inf" | sint ) ;
//! mono     := [ "-" ] ( "1" | "q" [ "^" sint ] ) ;
//! basemono := "q" [ "^" uint ] ;
//! ```
//!
//! `(q^2,q^10;q^12)_inf / (q;q)_inf` is `(q^2;q^12)_inf (q^10;q^12)_inf / (q;q)_inf`.

mod eval;
mod parser;

use std::fmt;

use serde::Serialize;

use crate::series::Monomial;

pub use eval::{evaluate, EvalError};
pub use parser::{parse, ParseError, MAX_LITERAL};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Index {
    Finite(i64),
    Infinite,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Factor {
    /// `(args; q^base)_index ^ power`
    Poch {
        args: Vec<Monomial>,
        base: i64,
        index: Index,
        power: i64,
    },
    Mono(Monomial),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ProductExpr {
    pub factors: Vec<Factor>,
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::Mono(m) => write!(f, "{m}"),
            Factor::Poch { args, base, index, power } => {
                f.write_str("(")?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{a}")?;
                }
                if *base == 1 {
                    f.write_str(";q)_")?;
                } else {
                    write!(f, ";q^{base})_")?;
                }
                match index {
                    Index::Infinite => f.write_str("inf")?,
                    Index::Finite(n) => write!(f, "{n}")?,
                }
                if *power != 1 {
                    write!(f, "^{power}")?;
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for ProductExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (i, factor) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" * ")?;
            }
            write!(f, "{factor}")?;
        }
        Ok(())
    }
}
