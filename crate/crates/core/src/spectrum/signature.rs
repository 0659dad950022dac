use serde::Serialize;

use crate::curve::CurveType;
use crate::rational::Rational;

/// Equivariant signatures of the two splice components of the link at
/// infinity, at the roots of unity `e^{2πi p/w}` and `e^{2πi q/b}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignatureProfile {
    curve: CurveType,
    /// `sigma1[p - 1]` for `p ∈ [1, w - 1]`.
    sigma1: Vec<i64>,
    /// `sigma2[q - 1]` for `q ∈ [1, b - 1]`.
    sigma2: Vec<i64>,
}

impl SignatureProfile {
    pub fn new(ct: &CurveType) -> Self {
        let (a, b, w) = (ct.a(), ct.b(), ct.w());
        let sigma1 = (1..w)
            .map(|p| {
                let delta = i64::from((p * b) % w == 0);
                2 * ((p * b) / w) - (b - 1) - delta
            })
            .collect();
        let sigma2 = (1..b)
            .map(|q| {
                let delta = i64::from((q * a) % b == 0);
                2 * ((q * a) / b) - (a - 1) - delta
            })
            .collect();
        SignatureProfile { curve: *ct, sigma1, sigma2 }
    }

    pub fn curve(&self) -> &CurveType {
        &self.curve
    }

    /// `σ¹_{p/w}`, `p ∈ [1, w - 1]`.
    pub fn sigma1(&self, p: i64) -> i64 {
        self.sigma1[(p - 1) as usize]
    }

    /// `σ²_{q/b}`, `q ∈ [1, b - 1]`.
    pub fn sigma2(&self, q: i64) -> i64 {
        self.sigma2[(q - 1) as usize]
    }

    pub fn sigma1_all(&self) -> &[i64] {
        &self.sigma1
    }

    pub fn sigma2_all(&self) -> &[i64] {
        &self.sigma2
    }

    /// Total equivariant signature at `e^{2πix}` for `x ∈ (0, 1)`: the sum of
    /// the contributions of whichever components have a root there.
    pub fn at(&self, x: &Rational) -> i64 {
        let (w, b) = (self.curve.w(), self.curve.b());
        let mut total = 0;
        if let Some(p) = x.mul_int(w).to_integer_i64() {
            total += self.sigma1(p);
        }
        if let Some(q) = x.mul_int(b).to_integer_i64() {
            total += self.sigma2(q);
        }
        total
    }
}
