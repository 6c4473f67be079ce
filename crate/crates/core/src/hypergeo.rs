//! Pochhammer symbols, log-gamma ratios and generalized hypergeometric series.
//!
//! `pFq(a; b; z) = sum_k prod (a_i)_k / prod (b_j)_k * z^k / k!` is summed by
//! the term recurrence `t_{k+1} = t_k * prod(a_i + k) / prod(b_j + k) * z / (k+1)`.
//! Terms and the running sum are carried in double-double precision so that
//! series with heavy cancellation (exponential-type series at arguments with
//! negative real part) still return a value accurate to the last bit of `f64`.
//!
//! All gamma-function ratios go through [`ln_gamma_ratio`], which never forms
//! `Gamma(x)` itself and stays finite for arguments of order `1e7`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::compensated::{Dd, DdComplex};
use crate::error::{Error, Result};

/// Default relative stopping tolerance for [`eval_pfq`].
pub const DEFAULT_TOL: f64 = 1e-17;
/// Default cap on the number of summed terms.
pub const DEFAULT_MAX_TERMS: usize = 20_000;

/// Stopping rule forwarded to [`eval_pfq`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SeriesOptions {
    pub tol: f64,
    pub max_terms: usize,
}

impl Default for SeriesOptions {
    fn default() -> Self {
        SeriesOptions {
            tol: DEFAULT_TOL,
            max_terms: DEFAULT_MAX_TERMS,
        }
    }
}

/// Consecutive small terms required before a series is declared converged.
const SMALL_RUN: usize = 3;

/// Shift applied before the Stirling series is used.
const STIRLING_MIN: f64 = 20.0;

/// `B_{2k} / (2k (2k-1))` for k = 1..8.
const STIRLING_COEFFS: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
];

const HALF_LN_2PI: f64 = 0.918_938_533_204_672_8;

/// Rising factorial `(a)_k = a (a+1) ... (a+k-1)`.
pub fn pochhammer(a: f64, k: u32) -> f64 {
    (0..k).map(|j| a + j as f64).product()
}

#[cfg(test)]
pub(crate) fn pochhammer_dd(a: f64, k: u32) -> Dd {
    (0..k).fold(Dd::ONE, |acc, j| acc * (Dd::new(a) + j as f64))
}

fn check_positive(name: &str, x: f64) -> Result<()> {
    if x.is_finite() && x > 0.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "{name} = {x} must be a positive finite real"
        )))
    }
}

fn stirling_tail(x: f64) -> f64 {
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    let mut acc = 0.0;
    for c in STIRLING_COEFFS.iter().rev() {
        acc = acc * inv2 + c;
    }
    acc * inv
}

#[allow(clippy::excessive_precision)]
const LANCZOS_G: f64 = 6.024_680_040_776_729_583_740_234_375;
#[allow(clippy::excessive_precision)]
const LANCZOS_G_MINUS_HALF: f64 = 5.524_680_040_776_729_583_740_234_375;
#[allow(clippy::excessive_precision)]
const LANCZOS_NUM: [f64; 13] = [
    23_531_376_880.410_759_688_572_007_674_451_636_754_734_846_804_94,
    42_919_803_642.649_098_768_957_899_047_001_988_850_926_355_848_96,
    35_711_959_237.355_668_049_440_185_451_547_166_705_960_488_635_84,
    17_921_034_426.037_209_699_919_755_754_458_931_112_671_403_265_39,
    6_039_542_586.352_028_005_064_291_644_307_297_921_069_938_842_07,
    1_439_720_407.311_721_673_663_223_072_794_912_393_971_548_578_68,
    248_874_557.862_054_156_511_460_386_413_229_423_216_321_251_278,
    31_426_415.585_400_194_380_614_231_628_318_205_362_874_684_987_6,
    2_876_370.628_935_372_441_225_409_051_620_849_613_599_114_537_88,
    186_056.265_395_223_495_040_294_989_716_045_699_282_207_842_363,
    8_071.672_002_365_816_210_638_002_902_272_250_613_821_851_632_5,
    210.824_277_751_579_345_872_509_733_920_713_362_711_669_695_803,
    2.506_628_274_631_000_270_164_908_177_133_837_338_626_431_079_34,
];
#[allow(clippy::excessive_precision)]
const LANCZOS_DEN: [f64; 13] = [
    0.0,
    39_916_800.0,
    120_543_840.0,
    150_917_976.0,
    105_258_076.0,
    45_995_730.0,
    13_339_535.0,
    2_637_558.0,
    357_423.0,
    32_670.0,
    1_925.0,
    66.0,
    1.0,
];

fn lanczos_sum(x: f64) -> f64 {
    let (mut num, mut den) = (0.0, 0.0);
    if x < 5.0 {
        for i in (0..13).rev() {
            num = num * x + LANCZOS_NUM[i];
            den = den * x + LANCZOS_DEN[i];
        }
    } else {
        let y = 1.0 / x;
        for i in 0..13 {
            num = num * y + LANCZOS_NUM[i];
            den = den * y + LANCZOS_DEN[i];
        }
    }
    num / den
}

/// `Gamma(x)` for `0 < x < STIRLING_MIN`, to a few ulps.
fn gamma_small(x: f64) -> f64 {
    if x.fract() == 0.0 {
        return (2..x as u32).map(f64::from).product();
    }
    let y = x + LANCZOS_G_MINUS_HALF;
    // Low-order bits of y lost in the addition above.
    let z = if x > LANCZOS_G_MINUS_HALF {
        (y - x) - LANCZOS_G_MINUS_HALF
    } else {
        (y - LANCZOS_G_MINUS_HALF) - x
    } * LANCZOS_G
        / y;
    let mut r = lanczos_sum(x) / y.exp();
    r += z * r;
    r * y.powf(x - 0.5)
}

/// `ln Gamma(x)` for `x > 0`.
pub fn ln_gamma(x: f64) -> Result<f64> {
    check_positive("x", x)?;
    if x < STIRLING_MIN {
        return Ok(gamma_small(x).ln());
    }
    Ok((x - 0.5) * x.ln() - x + HALF_LN_2PI + stirling_tail(x))
}

/// `ln(Gamma(a) / Gamma(b))` for `a, b > 0`, without cancellation between
/// two large log-gamma values.
pub fn ln_gamma_ratio(a: f64, b: f64) -> Result<f64> {
    check_positive("a", a)?;
    check_positive("b", b)?;
    if a == b {
        return Ok(0.0);
    }
    if a.max(b) < STIRLING_MIN {
        return Ok((gamma_small(a) / gamma_small(b)).ln());
    }
    let delta = a - b;
    // Shift both arguments up until the smaller one reaches the Stirling range.
    // Gamma(a)/Gamma(b) = Gamma(a+N)/Gamma(b+N) * prod_{i<N} (b+i)/(a+i).
    let mut correction = 0.0;
    let mut product = 1.0f64;
    let (mut big_a, mut big_b) = (a, b);
    while big_a.min(big_b) < STIRLING_MIN {
        product *= big_b / big_a;
        if !(1e-200..1e200).contains(&product) {
            correction += product.ln();
            product = 1.0;
        }
        big_a += 1.0;
        big_b += 1.0;
    }
    correction += product.ln();
    // (A-1/2) ln A - (B-1/2) ln B - (A-B) rewritten around B.
    let main = (big_b - 0.5) * (delta / big_b).ln_1p() + delta * big_a.ln() - delta;
    Ok(main + stirling_tail(big_a) - stirling_tail(big_b) + correction)
}

/// `Gamma(a) / Gamma(b)` for `a, b > 0`.
pub fn gamma_ratio(a: f64, b: f64) -> Result<f64> {
    Ok(ln_gamma_ratio(a, b)?.exp())
}

/// `|Gamma(x+a) / Gamma(x+b) * x^{b-a} - 1|`, the defect of the Binet
/// asymptotic `Gamma(x+a)/Gamma(x+b) ~ x^{a-b}`.
pub fn gamma_ratio_asymptotic_error(x: f64, a: f64, b: f64) -> Result<f64> {
    check_positive("x", x)?;
    if a == b {
        return Ok(0.0);
    }
    let log = ln_gamma_ratio(x + a, x + b)? - (a - b) * x.ln();
    Ok(log.exp_m1().abs())
}

/// Parameter lists of a `pFq` series.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HypergeometricSpec {
    numerator: Vec<f64>,
    denominator: Vec<f64>,
}

fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x.fract() == 0.0
}

impl HypergeometricSpec {
    pub fn new(numerator: Vec<f64>, denominator: Vec<f64>) -> Result<Self> {
        if let Some(&b) = denominator.iter().find(|&&b| is_nonpositive_integer(b)) {
            return Err(Error::InvalidParameter(format!(
                "denominator parameter {b} is zero or a negative integer"
            )));
        }
        if numerator.iter().chain(&denominator).any(|x| !x.is_finite()) {
            return Err(Error::InvalidParameter(
                "hypergeometric parameters must be finite".into(),
            ));
        }
        Ok(HypergeometricSpec {
            numerator,
            denominator,
        })
    }

    pub fn numerator(&self) -> &[f64] {
        &self.numerator
    }

    pub fn denominator(&self) -> &[f64] {
        &self.denominator
    }

    /// True when a numerator parameter is a nonpositive integer, so the
    /// series is a polynomial.
    pub fn is_terminating(&self) -> bool {
        self.numerator.iter().any(|&a| is_nonpositive_integer(a))
    }
}

/// Outcome of a series summation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SeriesResult {
    pub value: Complex64,
    pub terms_used: usize,
    /// Magnitude of the first neglected term.
    pub error_estimate: f64,
}

pub(crate) struct DdSeries {
    pub value: DdComplex,
    pub terms_used: usize,
    pub error_estimate: f64,
}

impl DdSeries {
    pub fn to_result(&self) -> SeriesResult {
        SeriesResult {
            value: self.value.to_c64(),
            terms_used: self.terms_used,
            error_estimate: self.error_estimate,
        }
    }
}

/// Evaluate `pFq(spec; z)`.
///
/// Summation stops once three consecutive terms satisfy
/// `|t_k| <= tol * |partial sum|`.
pub fn eval_pfq(
    spec: &HypergeometricSpec,
    z: Complex64,
    tol: f64,
    max_terms: usize,
) -> Result<SeriesResult> {
    eval_pfq_dd(spec, z.into(), tol, max_terms).map(|s| s.to_result())
}

pub(crate) fn eval_pfq_dd(
    spec: &HypergeometricSpec,
    z: DdComplex,
    tol: f64,
    max_terms: usize,
) -> Result<DdSeries> {
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "tolerance {tol} must be positive"
        )));
    }
    let p = spec.numerator.len();
    let q = spec.denominator.len();
    let modulus = z.norm();
    if !spec.is_terminating() && modulus > 0.0 {
        if p == q + 1 && modulus >= 1.0 {
            return Err(Error::Divergent(format!(
                "{p}F{q} requires |z| < 1, got |z| = {modulus}"
            )));
        }
        if p > q + 1 {
            return Err(Error::Divergent(format!(
                "{p}F{q} has zero radius of convergence"
            )));
        }
    }

    let next_term = |term: DdComplex, k: usize| -> DdComplex {
        let kf = k as f64;
        let num = spec
            .numerator
            .iter()
            .fold(Dd::ONE, |acc, &a| acc * (Dd::new(a) + kf));
        let den = spec
            .denominator
            .iter()
            .fold(Dd::new(kf + 1.0), |acc, &b| acc * (Dd::new(b) + kf));
        (term * z).scale(num / den)
    };

    let mut term = DdComplex::ONE;
    let mut sum = DdComplex::ZERO;
    let mut small = 0;
    let mut k = 0;
    loop {
        sum = sum + term;
        k += 1;
        if term.norm() <= tol * sum.norm() {
            small += 1;
        } else {
            small = 0;
        }
        term = next_term(term, k - 1);
        if small == SMALL_RUN {
            return Ok(DdSeries {
                value: sum,
                terms_used: k,
                error_estimate: term.norm(),
            });
        }
        if k >= max_terms {
            return Err(Error::NonConvergence {
                partial: SeriesResult {
                    value: sum.to_c64(),
                    terms_used: k,
                    error_estimate: term.norm(),
                },
            });
        }
    }
}

/// `|3F2(b, c, x+a; d, e; z/x) - 2F2(b, c; d, e; z)|`.
///
/// The confluent limit: as `x -> infinity` the extra numerator parameter
/// `x + a` and the argument scaling `1/x` cancel.
#[allow(clippy::too_many_arguments)]
pub fn limit_3f2_to_2f2_error(
    b: f64,
    c: f64,
    d: f64,
    e: f64,
    a: f64,
    z: Complex64,
    x: f64,
) -> Result<f64> {
    check_positive("x", x)?;
    if (z / x).norm() >= 1.0 {
        return Err(Error::Domain(format!(
            "|z/x| = {} must be < 1",
            (z / x).norm()
        )));
    }
    let f32_ = HypergeometricSpec::new(vec![b, c, x + a], vec![d, e])?;
    let f22 = HypergeometricSpec::new(vec![b, c], vec![d, e])?;
    let lhs = eval_pfq(&f32_, z / x, DEFAULT_TOL, DEFAULT_MAX_TERMS)?;
    let rhs = eval_pfq(&f22, z, DEFAULT_TOL, DEFAULT_MAX_TERMS)?;
    Ok((lhs.value - rhs.value).norm())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(7.3, 0), 1.0);
        assert_eq!(pochhammer(1.0, 4), 24.0);
        // 2.5 * 3.5 * 4.5
        assert_eq!(pochhammer(2.5, 3), 39.375);
    }

    #[test]
    fn ln_gamma_known_values() {
        assert!(ln_gamma(1.0).unwrap().abs() < 1e-15);
        assert!(ln_gamma(2.0).unwrap().abs() < 1e-15);
        // ln Gamma(1/2) = ln sqrt(pi)
        let half = std::f64::consts::PI.sqrt().ln();
        assert!((ln_gamma(0.5).unwrap() - half).abs() < 1e-15);
        // ln(10!) = ln 3628800
        assert!((ln_gamma(11.0).unwrap() - 3_628_800f64.ln()).abs() < 1e-13);
        assert!(ln_gamma(0.0).is_err());
        assert!(ln_gamma(-1.5).is_err());
    }

    #[test]
    fn gamma_ratio_examples() {
        assert!((gamma_ratio(3.0, 1.0).unwrap() - 2.0).abs() < 1e-14);
        // Gamma(103)/Gamma(101) = 102 * 101
        let r = gamma_ratio(103.0, 101.0).unwrap();
        assert!((r / 10302.0 - 1.0).abs() < 1e-13, "{r}");
        assert_eq!(gamma_ratio(17.5, 17.5).unwrap(), 1.0);
        assert!(gamma_ratio(0.0, 1.0).is_err());
        assert!(gamma_ratio(1.0, -2.0).is_err());
    }

    #[test]
    fn gamma_ratio_unit_shift() {
        for a in [0.5, 1.0, 10.0, 1e3] {
            let r = gamma_ratio(a + 1.0, a).unwrap();
            assert!((r / a - 1.0).abs() < 1e-13, "a = {a}: {r}");
        }
    }

    #[test]
    fn gamma_ratio_large_arguments() {
        let x = 1e7;
        let r = gamma_ratio(x + 2.0, x).unwrap();
        let exact = (x + 1.0) * x;
        assert!((r / exact - 1.0).abs() < 1e-12);
        // Half-integer shift: Gamma(x+1/2)/Gamma(x) ~ sqrt(x) (1 - 1/(8x)).
        let r = gamma_ratio(x + 0.5, x).unwrap();
        let approx = x.sqrt() * (1.0 - 1.0 / (8.0 * x) + 1.0 / (128.0 * x * x));
        assert!((r / approx - 1.0).abs() < 1e-14);
    }

    #[test]
    fn binet_defect_examples() {
        // (x+2)(x+1)/x^2 - 1 = 3/x + 2/x^2
        let e = gamma_ratio_asymptotic_error(1e4, 3.0, 1.0).unwrap();
        assert!((e - 3.0002e-4).abs() < 1e-15, "{e}");
        let e = gamma_ratio_asymptotic_error(1e2, 3.0, 1.0).unwrap();
        assert!((e - 3.02e-2).abs() < 1e-14, "{e}");
        assert_eq!(gamma_ratio_asymptotic_error(50.0, 1.5, 1.5).unwrap(), 0.0);
    }

    #[test]
    fn pfq_reductions() {
        let exp = HypergeometricSpec::new(vec![1.0, 1.0], vec![1.0, 1.0]).unwrap();
        let r = eval_pfq(&exp, c(1.0), DEFAULT_TOL, DEFAULT_MAX_TERMS).unwrap();
        assert!((r.value.re - std::f64::consts::E).abs() < 1e-15);
        assert!(r.terms_used >= 1);

        let binom = HypergeometricSpec::new(vec![1.0, 1.0, 3.0], vec![1.0, 1.0]).unwrap();
        let r = eval_pfq(&binom, c(0.5), DEFAULT_TOL, DEFAULT_MAX_TERMS).unwrap();
        assert!((r.value.re - 8.0).abs() < 1e-14);
    }

    #[test]
    fn pfq_against_partial_sum_oracle() {
        // 3F2(1,1,3;2,2;z) = sum_k (3)_k / ((k+1)^2) z^k / k!, summed directly in
        // double-double for 200 terms (the tail at z = 1/2 is below 1e-50).
        let spec = HypergeometricSpec::new(vec![1.0, 1.0, 3.0], vec![2.0, 2.0]).unwrap();
        // (3)_k z^k / k! overflows as separate factors past k = 170, so it is
        // carried as one running product.
        let mut oracle = Dd::ZERO;
        let mut core = Dd::ONE;
        for k in 0..200u32 {
            if k > 0 {
                core = core * (2.0 + k as f64) * 0.5 / k as f64;
            }
            let sq = ((k + 1) as f64) * ((k + 1) as f64);
            oracle = oracle + core / sq;
        }
        assert_eq!(pochhammer_dd(3.0, 4).to_f64(), 360.0);
        let r = eval_pfq(&spec, c(0.5), DEFAULT_TOL, DEFAULT_MAX_TERMS).unwrap();
        assert!((r.value.re / oracle.to_f64() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn pfq_errors() {
        let gauss = HypergeometricSpec::new(vec![1.0, 2.0], vec![3.0]).unwrap();
        assert!(matches!(
            eval_pfq(&gauss, c(1.0), DEFAULT_TOL, 100),
            Err(Error::Divergent(_))
        ));
        let slow = HypergeometricSpec::new(vec![1.0, 1.0], vec![2.0]).unwrap();
        match eval_pfq(&slow, c(0.999), DEFAULT_TOL, 50) {
            Err(Error::NonConvergence { partial }) => assert_eq!(partial.terms_used, 50),
            other => panic!("unexpected {other:?}"),
        }
        assert!(HypergeometricSpec::new(vec![1.0], vec![-2.0]).is_err());
        assert!(HypergeometricSpec::new(vec![1.0], vec![0.0]).is_err());
    }

    #[test]
    fn terminating_series_are_polynomials() {
        // 2F1(-2, 1; 1; z) = (1 - z)^2, valid even for |z| >= 1.
        let spec = HypergeometricSpec::new(vec![-2.0, 1.0], vec![1.0]).unwrap();
        let r = eval_pfq(&spec, c(3.0), DEFAULT_TOL, 100).unwrap();
        assert!((r.value.re - 4.0).abs() < 1e-14);
    }

    #[test]
    fn pfq_at_zero() {
        let spec = HypergeometricSpec::new(vec![2.0], vec![3.0]).unwrap();
        let r = eval_pfq(&spec, c(0.0), DEFAULT_TOL, 100).unwrap();
        assert_eq!(r.value, c(1.0));
        assert_eq!(r.error_estimate, 0.0);
    }

    #[test]
    fn confluent_limit_examples() {
        let z0 = limit_3f2_to_2f2_error(1.0, 1.0, 3.0, 3.0, 3.0, c(0.0), 1e3).unwrap();
        assert_eq!(z0, 0.0);
        let errs: Vec<f64> = [1e3, 1e4, 1e5]
            .iter()
            .map(|&x| limit_3f2_to_2f2_error(1.0, 1.0, 3.0, 3.0, 3.0, c(0.7), x).unwrap())
            .collect();
        assert!(errs[2] <= 1e-4);
        assert!(errs[0] > errs[1] && errs[1] > errs[2], "{errs:?}");
    }
}
