//! Exact linear expressions over the formal parameters `p`, `ν`, `n`.
//!
//! Every weight in a multiplet is an integer-linear combination of the three
//! induction parameters plus a constant, so this is the only arithmetic the
//! crate needs. Coefficients are `i64` with checked operations: an overflow
//! panics instead of silently wrapping.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::Error;

/// One of the three formal induction parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Symbol {
    P,
    Nu,
    N,
}

impl Symbol {
    pub const ALL: [Symbol; 3] = [Symbol::P, Symbol::Nu, Symbol::N];

    pub fn name(self, ascii: bool) -> &'static str {
        match (self, ascii) {
            (Symbol::P, _) => "p",
            (Symbol::Nu, false) => "ν",
            (Symbol::Nu, true) => "nu",
            (Symbol::N, _) => "n",
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name(false))
    }
}

impl FromStr for Symbol {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim() {
            "p" => Ok(Symbol::P),
            "nu" | "ν" => Ok(Symbol::Nu),
            "n" => Ok(Symbol::N),
            other => Err(Error::Parse(format!("unknown symbol `{other}`"))),
        }
    }
}

/// Sign of an expression when every surviving symbol ranges over `{1, 2, …}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SignClass {
    Positive,
    Zero,
    Negative,
    Indefinite,
}

impl SignClass {
    pub fn flip(self) -> SignClass {
        match self {
            SignClass::Positive => SignClass::Negative,
            SignClass::Negative => SignClass::Positive,
            s => s,
        }
    }
}

/// `c0 + cp·p + cnu·ν + cn·n` with exact integer coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct LinExpr {
    pub c0: i64,
    pub cp: i64,
    pub cnu: i64,
    pub cn: i64,
}

fn checked(v: Option<i64>) -> i64 {
    v.expect("LinExpr coefficient overflow")
}

impl LinExpr {
    pub const ZERO: LinExpr = LinExpr {
        c0: 0,
        cp: 0,
        cnu: 0,
        cn: 0,
    };

    pub const fn new(c0: i64, cp: i64, cnu: i64, cn: i64) -> Self {
        LinExpr { c0, cp, cnu, cn }
    }

    pub const fn constant(c: i64) -> Self {
        LinExpr::new(c, 0, 0, 0)
    }

    pub const fn symbol(s: Symbol) -> Self {
        match s {
            Symbol::P => LinExpr::new(0, 1, 0, 0),
            Symbol::Nu => LinExpr::new(0, 0, 1, 0),
            Symbol::N => LinExpr::new(0, 0, 0, 1),
        }
    }

    pub fn p() -> Self {
        Self::symbol(Symbol::P)
    }

    pub fn nu() -> Self {
        Self::symbol(Symbol::Nu)
    }

    pub fn n() -> Self {
        Self::symbol(Symbol::N)
    }

    pub fn coeff(&self, s: Symbol) -> i64 {
        match s {
            Symbol::P => self.cp,
            Symbol::Nu => self.cnu,
            Symbol::N => self.cn,
        }
    }

    fn coeff_mut(&mut self, s: Symbol) -> &mut i64 {
        match s {
            Symbol::P => &mut self.cp,
            Symbol::Nu => &mut self.cnu,
            Symbol::N => &mut self.cn,
        }
    }

    fn coeffs(&self) -> [i64; 4] {
        [self.c0, self.cp, self.cnu, self.cn]
    }

    pub fn is_zero(&self) -> bool {
        *self == Self::ZERO
    }

    /// Constant value if no symbol survives.
    pub fn as_constant(&self) -> Option<i64> {
        (self.cp == 0 && self.cnu == 0 && self.cn == 0).then_some(self.c0)
    }

    /// Sets the listed symbols formally to zero.
    pub fn substitute(&self, zeros: &[Symbol]) -> LinExpr {
        let mut out = *self;
        for &s in zeros {
            *out.coeff_mut(s) = 0;
        }
        out
    }

    /// Replaces assigned symbols by their values, leaving the rest symbolic.
    pub fn assign(&self, values: &BTreeMap<Symbol, i64>) -> LinExpr {
        let mut out = *self;
        for (&s, &v) in values {
            let c = out.coeff(s);
            out.c0 = checked(out.c0.checked_add(checked(c.checked_mul(v))));
            *out.coeff_mut(s) = 0;
        }
        out
    }

    pub fn evaluate(&self, values: &BTreeMap<Symbol, i64>) -> Result<i64, Error> {
        for s in Symbol::ALL {
            if self.coeff(s) != 0 && !values.contains_key(&s) {
                return Err(Error::MissingAssignment(s));
            }
        }
        Ok(self.assign(values).c0)
    }

    pub fn sign_class(&self) -> SignClass {
        let cs = self.coeffs();
        let any_pos = cs.iter().any(|&c| c > 0);
        let any_neg = cs.iter().any(|&c| c < 0);
        match (any_pos, any_neg) {
            (false, false) => SignClass::Zero,
            (true, false) => SignClass::Positive,
            (false, true) => SignClass::Negative,
            (true, true) => SignClass::Indefinite,
        }
    }

    /// True when every coefficient, constant included, is even.
    pub fn is_structurally_even(&self) -> bool {
        self.coeffs().iter().all(|c| c % 2 == 0)
    }

    /// Exact halving; `None` unless [`Self::is_structurally_even`].
    pub fn half(&self) -> Option<LinExpr> {
        self.is_structurally_even()
            .then(|| LinExpr::new(self.c0 / 2, self.cp / 2, self.cnu / 2, self.cn / 2))
    }

    pub fn render(&self, ascii: bool) -> String {
        let minus = if ascii { "-" } else { "\u{2212}" };
        let terms = [
            (self.cp, Some(Symbol::P)),
            (self.cnu, Some(Symbol::Nu)),
            (self.cn, Some(Symbol::N)),
            (self.c0, None),
        ];
        let mut out = String::new();
        for (c, sym) in terms {
            if c == 0 {
                continue;
            }
            if c < 0 {
                out.push_str(minus);
            } else if !out.is_empty() {
                out.push('+');
            }
            let mag = c.unsigned_abs();
            match sym {
                Some(s) => {
                    if mag != 1 {
                        out.push_str(&mag.to_string());
                    }
                    out.push_str(s.name(ascii));
                }
                None => out.push_str(&mag.to_string()),
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for LinExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

impl Add for LinExpr {
    type Output = LinExpr;

    fn add(self, rhs: LinExpr) -> LinExpr {
        LinExpr::new(
            checked(self.c0.checked_add(rhs.c0)),
            checked(self.cp.checked_add(rhs.cp)),
            checked(self.cnu.checked_add(rhs.cnu)),
            checked(self.cn.checked_add(rhs.cn)),
        )
    }
}

impl Neg for LinExpr {
    type Output = LinExpr;

    fn neg(self) -> LinExpr {
        LinExpr::new(
            checked(self.c0.checked_neg()),
            checked(self.cp.checked_neg()),
            checked(self.cnu.checked_neg()),
            checked(self.cn.checked_neg()),
        )
    }
}

impl Sub for LinExpr {
    type Output = LinExpr;

    fn sub(self, rhs: LinExpr) -> LinExpr {
        LinExpr::new(
            checked(self.c0.checked_sub(rhs.c0)),
            checked(self.cp.checked_sub(rhs.cp)),
            checked(self.cnu.checked_sub(rhs.cnu)),
            checked(self.cn.checked_sub(rhs.cn)),
        )
    }
}

impl From<i64> for LinExpr {
    fn from(c: i64) -> Self {
        LinExpr::constant(c)
    }
}

impl From<Symbol> for LinExpr {
    fn from(s: Symbol) -> Self {
        LinExpr::symbol(s)
    }
}

/// Parses the rendered form: `p+ν+n`, `−p−ν`, `2p-3nu+1`, `0`.
/// Accepts `ν`/`nu` and both ASCII `-` and `−` (U+2212). Whitespace is ignored.
impl FromStr for LinExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let src: String = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| if c == '\u{2212}' { '-' } else { c })
            .collect();
        if src.is_empty() {
            return Err(Error::Parse("empty expression".into()));
        }
        let bad = || Error::Parse(format!("malformed expression `{s}`"));

        let mut out = LinExpr::ZERO;
        let mut rest = src.as_str();
        let mut first = true;
        while !rest.is_empty() {
            let mut sign = 1i64;
            match rest.as_bytes()[0] {
                b'+' if !first => rest = &rest[1..],
                b'-' => {
                    sign = -1;
                    rest = &rest[1..];
                }
                _ if first => {}
                _ => return Err(bad()),
            }
            first = false;
            let digits = rest.bytes().take_while(u8::is_ascii_digit).count();
            let mag: Option<i64> = if digits > 0 {
                Some(rest[..digits].parse().map_err(|_| bad())?)
            } else {
                None
            };
            rest = &rest[digits..];
            let sym = if let Some(r) = rest.strip_prefix("nu") {
                rest = r;
                Some(Symbol::Nu)
            } else if let Some(r) = rest.strip_prefix('ν') {
                rest = r;
                Some(Symbol::Nu)
            } else if let Some(r) = rest.strip_prefix('p') {
                rest = r;
                Some(Symbol::P)
            } else if let Some(r) = rest.strip_prefix('n') {
                rest = r;
                Some(Symbol::N)
            } else {
                None
            };
            let term = match (mag, sym) {
                (m, Some(s)) => LinExpr::symbol(s) * checked(m.unwrap_or(1).checked_mul(sign)),
                (Some(m), None) => LinExpr::constant(checked(m.checked_mul(sign))),
                (None, None) => return Err(bad()),
            };
            out = out + term;
        }
        Ok(out)
    }
}

impl std::ops::Mul<i64> for LinExpr {
    type Output = LinExpr;

    fn mul(self, k: i64) -> LinExpr {
        LinExpr::new(
            checked(self.c0.checked_mul(k)),
            checked(self.cp.checked_mul(k)),
            checked(self.cnu.checked_mul(k)),
            checked(self.cn.checked_mul(k)),
        )
    }
}

impl Serialize for LinExpr {
    /// Constants serialize as JSON integers, everything else as the ASCII rendering.
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.as_constant() {
            Some(c) => s.serialize_i64(c),
            None => s.serialize_str(&self.render(true)),
        }
    }
}

impl<'de> Deserialize<'de> for LinExpr {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Int(i64),
            Text(String),
        }
        match Repr::deserialize(d)? {
            Repr::Int(c) => Ok(LinExpr::constant(c)),
            Repr::Text(t) => t.parse().map_err(serde::de::Error::custom),
        }
    }
}
