//! Curve types on `X_e`, one-Puiseux-pair cusps, and cusp configurations.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A curve class `aL + bM` on the Hirzebruch surface `X_e`, with its derived
/// numeric invariants computed at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CurveType {
    a: i64,
    b: i64,
    e: i64,
    w: i64,
    d: i64,
    c: i64,
    g: i64,
}

impl CurveType {
    /// Builds the type `(a, b)` on `X_e`.
    ///
    /// `b = 0` is rejected even for `e = 0`: nothing downstream is defined
    /// there.
    pub fn new(a: i64, b: i64, e: i64) -> Result<Self> {
        if a < 0 {
            return Err(Error::Domain(format!("a must be >= 0, got {a}")));
        }
        if b <= 0 {
            return Err(Error::Domain(format!("b must be > 0, got {b}")));
        }
        if e < 0 {
            return Err(Error::Domain(format!("e must be >= 0, got {e}")));
        }
        let overflow = || Error::Domain(format!("type ({a},{b}) on X_{e} overflows i64"));
        let be = b.checked_mul(e).ok_or_else(overflow)?;
        let w = a.checked_add(be).ok_or_else(overflow)?;
        if w <= 0 {
            return Err(Error::Domain(format!("w = a + be must be positive, got {w}")));
        }
        // d = 2ab + b^2 e = b (2a + be)
        let d = b
            .checked_mul(a.checked_mul(2).ok_or_else(overflow)?.checked_add(be).ok_or_else(overflow)?)
            .ok_or_else(overflow)?;
        // b(b-1)e is always even
        let g = (a - 1)
            .checked_mul(b - 1)
            .and_then(|x| x.checked_add(be.checked_mul(b - 1)? / 2))
            .ok_or_else(overflow)?;
        if g < 0 {
            return Err(Error::Domain(format!("negative arithmetic genus {g}")));
        }
        let ct = CurveType { a, b, e, w, d, c: a.gcd(&b), g };
        debug_assert!(ct.d > 0 && ct.d - 2 * ct.g == 2 * a + 2 * b + be - 2);
        Ok(ct)
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn e(&self) -> i64 {
        self.e
    }

    /// `a + be`.
    pub fn w(&self) -> i64 {
        self.w
    }

    /// Self-intersection `2ab + b^2 e`.
    pub fn d(&self) -> i64 {
        self.d
    }

    /// `gcd(a, b)`, which also equals `gcd(b, w)`.
    pub fn c(&self) -> i64 {
        self.c
    }

    /// Arithmetic genus `(a-1)(b-1) + b(b-1)e/2`.
    pub fn g(&self) -> i64 {
        self.g
    }
}

impl fmt::Display for CurveType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{}) on X_{}", self.a, self.b, self.e)
    }
}

/// A cusp locally given by `x^r = y^s`, `gcd(r, s) = 1`, `2 <= r < s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PuiseuxCusp {
    r: i64,
    s: i64,
}

impl PuiseuxCusp {
    pub fn new(r: i64, s: i64) -> Result<Self> {
        if r < 2 {
            return Err(Error::Domain(format!("cusp ({r},{s}): r must be >= 2")));
        }
        if s <= r {
            return Err(Error::Domain(format!("cusp ({r},{s}): need s > r")));
        }
        if r.gcd(&s) != 1 {
            return Err(Error::Domain(format!("cusp ({r},{s}): r and s must be coprime")));
        }
        if (r - 1).checked_mul(s - 1).is_none() {
            return Err(Error::Domain(format!("cusp ({r},{s}): Milnor number overflows")));
        }
        Ok(PuiseuxCusp { r, s })
    }

    /// Multiplicity of the cusp.
    pub fn r(&self) -> i64 {
        self.r
    }

    pub fn s(&self) -> i64 {
        self.s
    }

    /// Milnor number `(r-1)(s-1)`.
    pub fn mu(&self) -> i64 {
        (self.r - 1) * (self.s - 1)
    }

    /// Delta invariant, equal to the genus of the link: `mu / 2`.
    pub fn delta(&self) -> i64 {
        self.mu() / 2
    }
}

impl fmt::Display for PuiseuxCusp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.r, self.s)
    }
}

/// Ordered list of cusps on one curve.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CuspConfiguration {
    cusps: Vec<PuiseuxCusp>,
}

impl CuspConfiguration {
    pub fn new(cusps: Vec<PuiseuxCusp>) -> Self {
        CuspConfiguration { cusps }
    }

    pub fn unicuspidal(cusp: PuiseuxCusp) -> Self {
        CuspConfiguration { cusps: vec![cusp] }
    }

    pub fn cusps(&self) -> &[PuiseuxCusp] {
        &self.cusps
    }

    pub fn len(&self) -> usize {
        self.cusps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cusps.is_empty()
    }

    pub fn total_delta(&self) -> i64 {
        self.cusps.iter().map(PuiseuxCusp::delta).sum()
    }

    /// Same multiset of cusps, sorted.
    pub fn canonical(&self) -> Self {
        let mut cusps = self.cusps.clone();
        cusps.sort();
        CuspConfiguration { cusps }
    }

    pub fn is_genus_compatible(&self, ct: &CurveType) -> bool {
        self.total_delta() == ct.g()
    }

    /// `Ok(())` iff the cusps exhaust the genus of `ct`, so the curve is
    /// rational and has no other singularities.
    pub fn check_genus(&self, ct: &CurveType) -> Result<()> {
        let found = self.total_delta();
        if found == ct.g() {
            Ok(())
        } else {
            Err(Error::GenusMismatch { expected: ct.g(), found })
        }
    }
}

impl fmt::Display for CuspConfiguration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cusps.is_empty() {
            return write!(f, "{{}}");
        }
        let parts: Vec<String> = self.cusps.iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}
