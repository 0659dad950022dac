use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::curve::CurveType;
use crate::rational::Rational;

/// Alexander polynomial of the link at infinity,
/// `Δ(t) = (t - 1)(t^w - 1)^{b-1}(t^b - 1)^{a-1}`, described by its root
/// orders at roots of unity `e^{2πix}`, `x` a reduced fraction in `[0, 1)`.
///
/// For `a = 0` the last factor has exponent `-1`; the order formulas below
/// stay valid and `Δ` is then a genuine polynomial because `b | w`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AlexanderData {
    curve: CurveType,
}

impl AlexanderData {
    pub fn new(ct: &CurveType) -> Self {
        AlexanderData { curve: *ct }
    }

    pub fn curve(&self) -> &CurveType {
        &self.curve
    }

    /// `1 + w(b - 1) + b(a - 1)`.
    pub fn degree(&self) -> i64 {
        let (a, b, w) = (self.curve.a(), self.curve.b(), self.curve.w());
        1 + w * (b - 1) + b * (a - 1)
    }

    /// `ord_{t = e^{2πix}} Δ(t)` for `x ∈ [0, 1)`.
    pub fn order_at(&self, x: &Rational) -> i64 {
        let (a, b, w) = (self.curve.a(), self.curve.b(), self.curve.w());
        if x.is_zero() {
            return (b - 1) + (a - 1) + 1;
        }
        let v = x.denom();
        let divides = |n: i64| (BigInt::from(n) % v).is_zero();
        (b - 1) * i64::from(divides(w)) + (a - 1) * i64::from(divides(b))
    }

    /// Order of `Δ₂(t) = (t^c - 1)/(t - 1)`, `c = gcd(w, b)`, at `e^{2πix}`.
    /// It governs the size-2 Jordan blocks of the monodromy and does not
    /// enter the spectrum.
    pub fn delta2_order_at(&self, x: &Rational) -> i64 {
        if x.is_zero() {
            return 0;
        }
        i64::from((BigInt::from(self.curve.c()) % x.denom()).is_zero())
    }

    /// Every `x ∈ [0, 1)` where `Δ` can vanish: multiples of `1/w` and `1/b`.
    pub fn support(&self) -> Vec<Rational> {
        let (b, w) = (self.curve.b(), self.curve.w());
        let mut xs: Vec<Rational> = (0..w)
            .map(|p| Rational::new(p, w))
            .chain((0..b).map(|q| Rational::new(q, b)))
            .collect();
        xs.sort();
        xs.dedup();
        xs
    }

    /// Coefficients of `Δ(t)`, lowest degree first.
    pub fn coefficients(&self) -> Vec<BigInt> {
        let (a, b, w) = (self.curve.a(), self.curve.b(), self.curve.w());
        let mut poly = vec![-BigInt::one(), BigInt::one()];
        for _ in 0..b - 1 {
            poly = mul_binomial(&poly, w);
        }
        if a >= 1 {
            for _ in 0..a - 1 {
                poly = mul_binomial(&poly, b);
            }
        } else {
            poly = div_binomial(&poly, b);
        }
        poly
    }

    /// Coefficients of `Δ₂(t) = 1 + t + ... + t^{c-1}`.
    pub fn delta2_coefficients(&self) -> Vec<BigInt> {
        vec![BigInt::one(); self.curve.c() as usize]
    }
}

/// `poly · (t^k - 1)`.
fn mul_binomial(poly: &[BigInt], k: i64) -> Vec<BigInt> {
    let k = k as usize;
    let mut out = vec![BigInt::zero(); poly.len() + k];
    for (i, c) in poly.iter().enumerate() {
        out[i + k] += c;
        out[i] -= c;
    }
    out
}

/// `poly / (t^k - 1)`; the division must be exact.
fn div_binomial(poly: &[BigInt], k: i64) -> Vec<BigInt> {
    let k = k as usize;
    let n = poly.len() - 1;
    assert!(n >= k, "cannot divide degree {n} by t^{k} - 1");
    // q has degree n - k; poly = q·t^k - q, solve from the top
    let mut q = vec![BigInt::zero(); n - k + 1];
    for i in (0..=n - k).rev() {
        let mut c = poly[i + k].clone();
        if i + k <= n - k {
            c += &q[i + k];
        }
        q[i] = c;
    }
    debug_assert!({
        let back = mul_binomial(&q, k as i64);
        back.iter().zip(poly).all(|(x, y)| x == y)
    });
    q
}
