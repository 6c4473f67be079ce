//! Points of `C^n` and polynomial Taylor series in `n` complex variables.

use std::collections::BTreeMap;

use num_complex::Complex64;
use num_traits::ToPrimitive;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::compensated::ComplexSum;
use crate::error::{Error, Result};
use crate::multiindex::MultiIndex;

/// A point `z = (z_1, ..., z_n)` of `C^n`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CVector(Vec<Complex64>);

impl CVector {
    pub fn new(components: Vec<Complex64>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidParameter(
                "a point needs at least one coordinate".into(),
            ));
        }
        if components.iter().any(|c| !c.is_finite()) {
            return Err(Error::InvalidParameter(
                "point coordinates must be finite".into(),
            ));
        }
        Ok(CVector(components))
    }

    pub fn zero(n: usize) -> Self {
        CVector(vec![Complex64::new(0.0, 0.0); n.max(1)])
    }

    /// Point with real coordinates.
    pub fn real(coords: &[f64]) -> Result<Self> {
        CVector::new(coords.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn components(&self) -> &[Complex64] {
        &self.0
    }

    /// `|z| = sqrt(<z, z>)`.
    pub fn norm(&self) -> f64 {
        self.0.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn scale(&self, s: f64) -> CVector {
        CVector(self.0.iter().map(|c| c * s).collect())
    }
}

/// Hermitian inner product `<z, w> = sum_j z_j conj(w_j)`.
pub fn inner(z: &CVector, w: &CVector) -> Result<Complex64> {
    if z.dim() != w.dim() {
        return Err(Error::DimensionMismatch {
            expected: z.dim(),
            found: w.dim(),
        });
    }
    Ok(z.0.iter().zip(&w.0).map(|(a, b)| a * b.conj()).sum())
}

/// A polynomial `f(z) = sum_p a_p z^p` stored sparsely.
///
/// Keys are kept in graded multi-index order and exact zeros are never
/// stored, so two series are equal exactly when their maps are.
#[derive(Debug, Clone, PartialEq)]
pub struct TaylorSeries {
    dim: usize,
    coeffs: BTreeMap<MultiIndex, Complex64>,
}

impl TaylorSeries {
    pub fn zero(dim: usize) -> Self {
        assert!(dim >= 1, "dimension must be at least 1");
        TaylorSeries {
            dim,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn from_terms<I>(dim: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (MultiIndex, Complex64)>,
    {
        let mut f = TaylorSeries::zero(dim);
        for (p, a) in terms {
            f.add_term(p, a)?;
        }
        Ok(f)
    }

    /// The monomial `z^p`.
    pub fn monomial(p: MultiIndex) -> Self {
        let mut coeffs = BTreeMap::new();
        let dim = p.len();
        coeffs.insert(p, Complex64::new(1.0, 0.0));
        TaylorSeries { dim, coeffs }
    }

    /// Add `a z^p` to the series, pruning a coefficient that becomes zero.
    pub fn add_term(&mut self, p: MultiIndex, a: Complex64) -> Result<()> {
        if p.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: p.len(),
            });
        }
        if !a.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "coefficient at {p} is not finite"
            )));
        }
        let entry = self.coeffs.entry(p).or_insert(Complex64::new(0.0, 0.0));
        *entry += a;
        self.coeffs.retain(|_, c| *c != Complex64::new(0.0, 0.0));
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeff(&self, p: &MultiIndex) -> Complex64 {
        self.coeffs.get(p).copied().unwrap_or_default()
    }

    /// Nonzero coefficients in graded order.
    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &Complex64)> {
        self.coeffs.iter()
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Total degree; zero for the zero series.
    pub fn degree(&self) -> u32 {
        self.coeffs.keys().map(|p| p.degree()).max().unwrap_or(0)
    }

    /// `f(z)`, summed over stored terms in graded order.
    pub fn evaluate(&self, z: &CVector) -> Result<Complex64> {
        if z.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: z.dim(),
            });
        }
        let sum: ComplexSum = self
            .coeffs
            .iter()
            .map(|(p, a)| a * p.monomial(z.components()))
            .collect();
        Ok(sum.value())
    }

    /// Split into `(f_{1,m}, f_{2,m})`: terms of degree `< m` and `>= m`.
    pub fn split(&self, m: u32) -> (TaylorSeries, TaylorSeries) {
        let (low, high): (BTreeMap<_, _>, BTreeMap<_, _>) = self
            .coeffs
            .iter()
            .map(|(p, a)| (p.clone(), *a))
            .partition(|(p, _)| p.degree() < m);
        (
            TaylorSeries {
                dim: self.dim,
                coeffs: low,
            },
            TaylorSeries {
                dim: self.dim,
                coeffs: high,
            },
        )
    }

    /// `D^q f`, with `D^q z^p = p!/(p-q)! z^{p-q}` and zero when `q` exceeds `p`.
    pub fn derivative(&self, q: &MultiIndex) -> Result<TaylorSeries> {
        if q.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: q.len(),
            });
        }
        let coeffs = self
            .coeffs
            .iter()
            .filter_map(|(p, a)| {
                let rest = p.checked_sub(q)?;
                let factor = p.falling_ratio(q).to_f64().unwrap_or(f64::INFINITY);
                Some((rest, a * factor))
            })
            .collect();
        Ok(TaylorSeries {
            dim: self.dim,
            coeffs,
        })
    }

    pub fn add(&self, other: &TaylorSeries) -> Result<TaylorSeries> {
        let mut out = self.clone();
        for (p, a) in other.terms() {
            out.add_term(p.clone(), *a)?;
        }
        Ok(out)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("taylor series serialization cannot fail")
    }

    pub fn from_json(s: &str) -> std::result::Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    p: Vec<u32>,
    re: f64,
    im: f64,
}

#[derive(Serialize, Deserialize)]
struct SeriesRepr {
    n: usize,
    terms: Vec<TermRepr>,
}

impl Serialize for TaylorSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SeriesRepr {
            n: self.dim,
            terms: self
                .coeffs
                .iter()
                .map(|(p, a)| TermRepr {
                    p: p.parts().to_vec(),
                    re: a.re,
                    im: a.im,
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TaylorSeries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = SeriesRepr::deserialize(deserializer)?;
        if repr.n == 0 {
            return Err(D::Error::custom("n must be at least 1"));
        }
        let terms = repr
            .terms
            .into_iter()
            .map(|t| {
                MultiIndex::new(t.p)
                    .map(|p| (p, Complex64::new(t.re, t.im)))
                    .map_err(D::Error::custom)
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        TaylorSeries::from_terms(repr.n, terms).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn mi(parts: &[u32]) -> MultiIndex {
        MultiIndex::new(parts.to_vec()).unwrap()
    }

    fn poly(dim: usize, terms: &[(&[u32], Complex64)]) -> TaylorSeries {
        TaylorSeries::from_terms(dim, terms.iter().map(|(p, a)| (mi(p), *a))).unwrap()
    }

    #[test]
    fn inner_examples() {
        let e1 = CVector::real(&[1.0, 0.0]).unwrap();
        let e2 = CVector::real(&[0.0, 1.0]).unwrap();
        assert_eq!(inner(&e1, &e2).unwrap(), c(0.0, 0.0));
        let i0 = CVector::new(vec![c(0.0, 1.0), c(0.0, 0.0)]).unwrap();
        assert_eq!(inner(&i0, &i0).unwrap(), c(1.0, 0.0));
        let z = CVector::new(vec![c(1.0, 0.0), c(2.0, 0.0)]).unwrap();
        let w = CVector::new(vec![c(3.0, 0.0), c(0.0, 4.0)]).unwrap();
        assert_eq!(inner(&z, &w).unwrap(), c(3.0, -8.0));
        assert!(inner(&z, &CVector::zero(3)).is_err());
        assert_eq!(CVector::real(&[3.0, 4.0]).unwrap().norm(), 5.0);
    }

    #[test]
    fn evaluate_examples() {
        let one = poly(2, &[(&[0, 0], c(1.0, 0.0))]);
        let z = CVector::new(vec![c(0.3, -2.0), c(5.0, 1.0)]).unwrap();
        assert_eq!(one.evaluate(&z).unwrap(), c(1.0, 0.0));

        let z1z2 = TaylorSeries::monomial(mi(&[1, 1]));
        let z = CVector::real(&[2.0, 3.0]).unwrap();
        assert_eq!(z1z2.evaluate(&z).unwrap(), c(6.0, 0.0));

        let f = poly(
            2,
            &[
                (&[0, 0], c(1.0, 0.0)),
                (&[1, 0], c(2.0, 0.0)),
                (&[0, 2], c(1.0, 0.0)),
            ],
        );
        let z = CVector::new(vec![c(1.0, 0.0), c(0.0, 1.0)]).unwrap();
        assert_eq!(f.evaluate(&z).unwrap(), c(2.0, 0.0));
        assert!(f.evaluate(&CVector::zero(3)).is_err());
    }

    #[test]
    fn split_examples() {
        let f = poly(
            2,
            &[
                (&[0, 0], c(1.0, 0.0)),
                (&[1, 0], c(1.0, 0.0)),
                (&[1, 1], c(1.0, 0.0)),
            ],
        );
        let (lo, hi) = f.split(1);
        assert_eq!(lo, poly(2, &[(&[0, 0], c(1.0, 0.0))]));
        assert_eq!(
            hi,
            poly(2, &[(&[1, 0], c(1.0, 0.0)), (&[1, 1], c(1.0, 0.0))])
        );
        let (lo, hi) = f.split(0);
        assert!(lo.is_zero());
        assert_eq!(hi, f);
        let (lo, hi) = f.split(f.degree() + 1);
        assert_eq!(lo, f);
        assert!(hi.is_zero());
    }

    #[test]
    fn derivative_examples() {
        let f = TaylorSeries::monomial(mi(&[2, 1]));
        assert_eq!(
            f.derivative(&mi(&[1, 0])).unwrap(),
            poly(2, &[(&[1, 1], c(2.0, 0.0))])
        );
        let z1 = TaylorSeries::monomial(mi(&[1, 0]));
        assert!(z1.derivative(&mi(&[0, 2])).unwrap().is_zero());
        let z1z2 = TaylorSeries::monomial(mi(&[1, 1]));
        assert_eq!(
            z1z2.derivative(&mi(&[1, 1])).unwrap(),
            poly(2, &[(&[0, 0], c(1.0, 0.0))])
        );
        assert!(z1z2.derivative(&mi(&[1])).is_err());
    }

    #[test]
    fn monomial_examples() {
        let one = TaylorSeries::monomial(mi(&[0, 0]));
        assert_eq!(one, poly(2, &[(&[0, 0], c(1.0, 0.0))]));
        let f = TaylorSeries::monomial(mi(&[2, 1]));
        assert_eq!(
            f.evaluate(&CVector::real(&[1.0, 3.0]).unwrap()).unwrap(),
            c(3.0, 0.0)
        );
        let p = mi(&[3, 2]);
        let full = TaylorSeries::monomial(p.clone()).derivative(&p).unwrap();
        assert_eq!(full, poly(2, &[(&[0, 0], c(12.0, 0.0))]));
    }

    #[test]
    fn zero_coefficients_are_pruned() {
        let mut f = poly(1, &[(&[2], c(1.0, 0.5))]);
        f.add_term(mi(&[2]), c(-1.0, -0.5)).unwrap();
        assert!(f.is_zero());
        f.add_term(mi(&[1]), c(0.0, 0.0)).unwrap();
        assert!(f.is_zero());
        assert!(f.add_term(mi(&[1, 1]), c(1.0, 0.0)).is_err());
    }

    #[test]
    fn json_layout() {
        let f = poly(2, &[(&[0, 0], c(1.0, 0.0)), (&[2, 1], c(0.5, -1.5))]);
        let s = f.to_json();
        assert_eq!(
            s,
            r#"{"n":2,"terms":[{"p":[0,0],"re":1.0,"im":0.0},{"p":[2,1],"re":0.5,"im":-1.5}]}"#
        );
        assert_eq!(TaylorSeries::from_json(&s).unwrap(), f);
        assert!(TaylorSeries::from_json(r#"{"n":2,"terms":[{"p":[1],"re":1,"im":0}]}"#).is_err());
        assert!(TaylorSeries::from_json(r#"{"n":0,"terms":[]}"#).is_err());
    }
}
