//! Quadrature engines and vertical-line contour integration.
//!
//! Three rules are provided: Gauss-Legendre on finite panels, a double
//! exponential (exp-sinh) rule on the half line, and tensor-product
//! Gauss-Hermite up to dimension 4. Contour integrals of the form
//! (1/2πi)∫_{c-iT}^{c+iT} g(s) ds are evaluated with Gauss-Legendre panels
//! refined by panel halving, plus a geometric tail estimate from |g(c±iT)|.

use num_complex::Complex64;
use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{Error, Result};

/// Selects how floating-point reductions are accumulated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WorkingMode {
    /// Plain IEEE double accumulation.
    Double,
    /// Software double-double accumulation (two-sum compensated) in all
    /// quadrature, contour, and series reductions.
    Extended,
}

#[derive(Debug, Clone, Copy)]
pub struct PrecisionConfig {
    pub target_rel_tol: f64,
    pub max_nodes: usize,
    pub working_mode: WorkingMode,
}

impl PrecisionConfig {
    pub fn new(target_rel_tol: f64, max_nodes: usize, working_mode: WorkingMode) -> Result<Self> {
        if !(target_rel_tol > 0.0 && target_rel_tol < 1.0) {
            return Err(Error::Config(format!(
                "target_rel_tol must lie in (0,1), got {target_rel_tol}"
            )));
        }
        if max_nodes < 16 {
            return Err(Error::Config(format!(
                "max_nodes must be at least 16, got {max_nodes}"
            )));
        }
        Ok(Self {
            target_rel_tol,
            max_nodes,
            working_mode,
        })
    }
}

impl Default for PrecisionConfig {
    fn default() -> Self {
        Self {
            target_rel_tol: 1e-11,
            max_nodes: 1 << 14,
            working_mode: WorkingMode::Double,
        }
    }
}

/// A vertical-line integration contour Re(s) = abscissa, |Im(s)| <= height.
#[derive(Debug, Clone, Copy)]
pub struct ContourSpec {
    pub abscissa: f64,
    pub height: f64,
    pub nodes: usize,
}

impl ContourSpec {
    pub fn new(abscissa: f64, height: f64, nodes: usize) -> Result<Self> {
        if !(height > 0.0) {
            return Err(Error::Config(format!("contour height must be > 0, got {height}")));
        }
        if nodes < 64 {
            return Err(Error::Config(format!("contour nodes must be >= 64, got {nodes}")));
        }
        Ok(Self {
            abscissa,
            height,
            nodes,
        })
    }

    /// Checks a caller-supplied constraint predicate on the abscissa
    /// (pole clearance conditions such as c1 > 0 > c2).
    pub fn check_abscissa(self, pred: impl Fn(f64) -> bool, desc: &str) -> Result<Self> {
        if pred(self.abscissa) {
            Ok(self)
        } else {
            Err(Error::Contour(format!(
                "abscissa {} violates constraint: {desc}",
                self.abscissa
            )))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RuleKind {
    GaussLegendre,
    TanhSinhHalfline,
    GaussHermite,
}

#[derive(Debug, Clone, Copy)]
pub struct QuadratureRule {
    pub kind: RuleKind,
    pub order: usize,
    pub dimension: usize,
}

impl QuadratureRule {
    pub fn new(kind: RuleKind, order: usize, dimension: usize) -> Result<Self> {
        if order == 0 || dimension == 0 {
            return Err(Error::Config("order and dimension must be positive".into()));
        }
        Ok(Self {
            kind,
            order,
            dimension,
        })
    }

    pub fn halfline(order: usize) -> Self {
        Self {
            kind: RuleKind::TanhSinhHalfline,
            order,
            dimension: 1,
        }
    }
}

/// A quadrature value together with its internal error estimate.
#[derive(Debug, Clone, Copy)]
pub struct Estimate<T> {
    pub value: T,
    pub abs_err: f64,
}

/// Values that quadrature loops can accumulate: reals and complex numbers.
pub trait Accumulable:
    Copy + std::ops::Add<Output = Self> + std::ops::Sub<Output = Self> + std::ops::Mul<f64, Output = Self>
{
    fn zero() -> Self;
    fn mag(&self) -> f64;
    fn is_finite_val(&self) -> bool;
}

impl Accumulable for f64 {
    fn zero() -> Self {
        0.0
    }
    fn mag(&self) -> f64 {
        self.abs()
    }
    fn is_finite_val(&self) -> bool {
        self.is_finite()
    }
}

impl Accumulable for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn mag(&self) -> f64 {
        self.norm()
    }
    fn is_finite_val(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
}

/// Compensated accumulator; in `Extended` mode keeps a two-sum error term
/// so that long reductions carry roughly double-double significance.
#[derive(Debug, Clone, Copy)]
pub struct Accumulator<T: Accumulable> {
    sum: T,
    comp: T,
    extended: bool,
}

impl<T: Accumulable> Accumulator<T> {
    pub fn new(mode: WorkingMode) -> Self {
        Self {
            sum: T::zero(),
            comp: T::zero(),
            extended: mode == WorkingMode::Extended,
        }
    }

    pub fn add(&mut self, x: T) {
        if self.extended {
            // Neumaier two-sum on the magnitude-dominant component.
            let t = self.sum + x;
            let correction = if self.sum.mag() >= x.mag() {
                (self.sum - t) + x
            } else {
                (x - t) + self.sum
            };
            self.comp = self.comp + correction;
            self.sum = t;
        } else {
            self.sum = self.sum + x;
        }
    }

    pub fn total(&self) -> T {
        self.sum + self.comp
    }
}

/// Integrates `f` over (0, ∞) with the double exponential substitution
/// x = exp((π/2)·sinh u), refining by step halving until the relative
/// change is below `cfg.target_rel_tol` or the node budget is exhausted.
pub fn integrate_halfline(
    f: impl Fn(f64) -> f64,
    rule: &QuadratureRule,
    cfg: &PrecisionConfig,
) -> Result<Estimate<f64>> {
    if rule.kind != RuleKind::TanhSinhHalfline {
        return Err(Error::Config(
            "integrate_halfline requires a tanh-sinh-halfline rule".into(),
        ));
    }
    exp_sinh(f, cfg)
}

/// Complex-valued variant of [`integrate_halfline`] sharing the same nodes.
pub fn integrate_halfline_complex(
    f: impl Fn(f64) -> Complex64,
    cfg: &PrecisionConfig,
) -> Result<Estimate<Complex64>> {
    exp_sinh(f, cfg)
}

/// Like [`integrate_halfline_complex`] but returns the last refinement
/// instead of failing when the tolerance is not met; for use as the inner
/// layer of nested quadratures where the outer layer owns convergence.
pub fn integrate_halfline_complex_best(
    f: impl Fn(f64) -> Complex64,
    cfg: &PrecisionConfig,
) -> Estimate<Complex64> {
    exp_sinh_impl(f, cfg, true).expect("lenient quadrature cannot fail")
}

/// Maximum |u| for the exp-sinh grid: beyond this, x = exp((π/2)·sinh u)
/// under/overflows f64 entirely.
const EXP_SINH_UMAX: f64 = 4.4;

fn exp_sinh<T: Accumulable>(f: impl Fn(f64) -> T, cfg: &PrecisionConfig) -> Result<Estimate<T>> {
    exp_sinh_impl(f, cfg, false)
}

fn exp_sinh_impl<T: Accumulable>(
    f: impl Fn(f64) -> T,
    cfg: &PrecisionConfig,
    lenient: bool,
) -> Result<Estimate<T>> {
    let eval = |u: f64| -> T {
        let s = FRAC_PI_2 * u.sinh();
        let x = s.exp();
        if x == 0.0 || !x.is_finite() {
            return T::zero();
        }
        let w = FRAC_PI_2 * u.cosh() * x;
        let v = f(x) * w;
        if v.is_finite_val() {
            v
        } else {
            T::zero()
        }
    };

    let mut h = 0.5;
    let mut nodes_used = 1usize;
    // Level 0: full grid at spacing h.
    let mut acc = Accumulator::new(cfg.working_mode);
    acc.add(eval(0.0));
    let mut k = 1;
    while (k as f64) * h <= EXP_SINH_UMAX {
        acc.add(eval(k as f64 * h));
        acc.add(eval(-(k as f64) * h));
        nodes_used += 2;
        k += 1;
    }
    let mut value = acc.total() * h;
    let mut prev = value;

    loop {
        h *= 0.5;
        // Only the new midpoints contribute at this level.
        let mut acc = Accumulator::new(cfg.working_mode);
        let mut k = 1;
        while (k as f64) * h <= EXP_SINH_UMAX {
            acc.add(eval(k as f64 * h));
            acc.add(eval(-(k as f64) * h));
            nodes_used += 2;
            k += 2;
        }
        value = prev * 0.5 + acc.total() * h;
        let err = (value - prev).mag();
        let scale = value.mag().max(f64::MIN_POSITIVE);
        if err <= cfg.target_rel_tol * scale {
            return Ok(Estimate {
                value,
                abs_err: err,
            });
        }
        if nodes_used > cfg.max_nodes {
            if lenient {
                return Ok(Estimate {
                    value,
                    abs_err: err,
                });
            }
            return Err(Error::NoConvergence {
                prev: prev.mag(),
                last: value.mag(),
                tol: cfg.target_rel_tol,
            });
        }
        prev = value;
    }
}

/// Gauss-Legendre nodes and weights on [-1, 1], by Newton iteration on P_n.
pub fn gauss_legendre(order: usize) -> (Vec<f64>, Vec<f64>) {
    let n = order;
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        loop {
            // Legendre recurrence for P_n(x) and P'_n(x).
            let (mut p0, mut p1) = (1.0, x);
            for j in 2..=n {
                let p2 = ((2 * j - 1) as f64 * x * p1 - (j - 1) as f64 * p0) / j as f64;
                p0 = p1;
                p1 = p2;
            }
            let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                let (mut p0f, mut p1f) = (1.0, x);
                for j in 2..=n {
                    let p2 = ((2 * j - 1) as f64 * x * p1f - (j - 1) as f64 * p0f) / j as f64;
                    p0f = p1f;
                    p1f = p2;
                }
                let dpf = n as f64 * (x * p1f - p0f) / (x * x - 1.0);
                nodes[i] = -x;
                nodes[n - 1 - i] = x;
                let w = 2.0 / ((1.0 - x * x) * dpf * dpf);
                weights[i] = w;
                weights[n - 1 - i] = w;
                break;
            }
        }
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    (nodes, weights)
}

/// Gauss-Hermite nodes and weights for ∫ f(x) e^{-x²} dx, by Newton
/// iteration on the physicists' Hermite polynomials.
pub fn gauss_hermite(order: usize) -> (Vec<f64>, Vec<f64>) {
    let n = order;
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    let sqrt_pi = PI.sqrt();
    let mut x = 0.0f64;
    for i in 0..m {
        // Initial guesses from standard asymptotic spacing, largest root first.
        x = if i == 0 {
            ((2 * n + 1) as f64).sqrt() - 1.85575 * ((2 * n + 1) as f64).powf(-1.0 / 6.0)
        } else if i == 1 {
            x - 1.14 * (n as f64).powf(0.426) / x
        } else if i == 2 {
            1.86 * x - 0.86 * nodes[n - 1]
        } else if i == 3 {
            1.91 * x - 0.91 * nodes[n - 2]
        } else {
            2.0 * x - nodes[n - i + 1]
        };
        // Newton on the orthonormal recurrence.
        for _ in 0..200 {
            let mut p0 = 1.0 / sqrt_pi.sqrt();
            let mut p1 = x * (2.0f64).sqrt() / sqrt_pi.sqrt();
            for j in 2..=n {
                let p2 = x * (2.0 / j as f64).sqrt() * p1
                    - ((j - 1) as f64 / j as f64).sqrt() * p0;
                p0 = p1;
                p1 = p2;
            }
            let dp = (2.0 * n as f64).sqrt() * p0;
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                nodes[n - 1 - i] = x;
                nodes[i] = -x;
                let w = 2.0 / (dp * dp);
                weights[n - 1 - i] = w;
                weights[i] = w;
                break;
            }
        }
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    (nodes, weights)
}

/// Tensor-product Gauss-Hermite integration of ∫ f(x) e^{-|x|²} dx over ℝ^dim.
/// Exact for polynomial f of total degree ≤ 2·order−1 per axis.
pub fn integrate_tensor_hermite(
    f: impl Fn(&[f64]) -> f64,
    order: usize,
    dim: usize,
) -> Result<f64> {
    if dim == 0 || dim > 4 {
        return Err(Error::domain(format!(
            "tensor Gauss-Hermite supports dimensions 1..=4, got {dim}"
        )));
    }
    let (nodes, weights) = gauss_hermite(order);
    let n = nodes.len();
    let mut idx = [0usize; 4];
    let mut x = [0.0f64; 4];
    let mut sum = 0.0;
    loop {
        let mut w = 1.0;
        for d in 0..dim {
            x[d] = nodes[idx[d]];
            w *= weights[idx[d]];
        }
        sum += w * f(&x[..dim]);
        // Odometer increment over the tensor grid.
        let mut d = 0;
        loop {
            idx[d] += 1;
            if idx[d] < n {
                break;
            }
            idx[d] = 0;
            d += 1;
            if d == dim {
                return Ok(sum);
            }
        }
    }
}

/// Result of a contour integration: value, refinement error, and the
/// estimated magnitude of the discarded tails beyond ±iT.
#[derive(Debug, Clone, Copy)]
pub struct ContourEstimate {
    pub value: Complex64,
    pub abs_err: f64,
    pub tail_estimate: f64,
    pub tail_flagged: bool,
}

/// Evaluates (1/2πi) ∫_{c-iT}^{c+iT} g(s) ds by Gauss-Legendre panels of
/// width 2 on the imaginary axis, refined by panel halving. The discarded
/// tail is estimated from |g| near ±iT assuming geometric decay; if the
/// estimate exceeds the tolerance the result is flagged but still returned.
pub fn contour_line(
    g: impl Fn(Complex64) -> Complex64,
    spec: &ContourSpec,
    cfg: &PrecisionConfig,
) -> Result<ContourEstimate> {
    let c = spec.abscissa;
    let t_max = spec.height;
    let eval = |t: f64| g(Complex64::new(c, t));

    let per_panel = 12usize;
    let mut width = 2.0f64;
    let mut prev: Option<Complex64> = None;
    let mut value;
    let mut err = f64::INFINITY;
    loop {
        let panels = ((2.0 * t_max) / width).ceil() as usize;
        let actual_width = 2.0 * t_max / panels as f64;
        let (xs, ws) = gauss_legendre(per_panel);
        let mut acc = Accumulator::new(cfg.working_mode);
        for p in 0..panels {
            let a = -t_max + p as f64 * actual_width;
            let half = 0.5 * actual_width;
            let mid = a + half;
            for (x, w) in xs.iter().zip(ws.iter()) {
                acc.add(eval(mid + half * x) * (w * half));
            }
        }
        value = acc.total() * (1.0 / (2.0 * PI));
        if let Some(p) = prev {
            err = (value - p).norm();
            let scale = value.norm().max(f64::MIN_POSITIVE);
            if err <= cfg.target_rel_tol * scale {
                break;
            }
        }
        if panels * per_panel * 2 > cfg.max_nodes {
            break;
        }
        prev = Some(value);
        width *= 0.5;
    }

    // Geometric tail estimate from samples near the truncation height.
    let g_top = eval(t_max).norm();
    let g_top_in = eval(t_max - 1.0).norm();
    let g_bot = eval(-t_max).norm();
    let g_bot_in = eval(-(t_max - 1.0)).norm();
    let tail_one = |edge: f64, inner: f64| -> f64 {
        if edge == 0.0 {
            return 0.0;
        }
        let r = edge / inner.max(f64::MIN_POSITIVE);
        if r < 1.0 {
            edge * r / (1.0 - r) + edge
        } else {
            // No observed decay; report the edge magnitude itself.
            edge * t_max
        }
    };
    let tail_estimate = (tail_one(g_top, g_top_in) + tail_one(g_bot, g_bot_in)) / (2.0 * PI);
    let tail_flagged = tail_estimate > cfg.target_rel_tol * value.norm().max(f64::MIN_POSITIVE);

    Ok(ContourEstimate {
        value,
        abs_err: err,
        tail_estimate,
        tail_flagged,
    })
}

/// Evaluates (1/2πi)² ∫∫ g(s1, s2) ds2 ds1 over two vertical lines by a
/// tensor-product trapezoid grid, halving the spacing on both axes until
/// the relative change is below the tolerance. For integrands analytic in
/// a strip around the lines and decaying at ±iT (the Γ-driven case) the
/// trapezoid sum converges geometrically in 1/h, and successive node sets
/// nest, so per-node caches in `g` are reused across refinements.
pub fn contour_double(
    g: impl Fn(Complex64, Complex64) -> Complex64,
    spec1: &ContourSpec,
    spec2: &ContourSpec,
    cfg: &PrecisionConfig,
) -> Result<ContourEstimate> {
    let axis_nodes = |spec: &ContourSpec, h: f64| -> Vec<f64> {
        let k_max = (spec.height / h).floor() as i64;
        (-k_max..=k_max).map(|k| k as f64 * h).collect()
    };

    let mut h = 0.5f64;
    let mut prev: Option<Complex64> = None;
    let mut value;
    let mut err = f64::INFINITY;
    loop {
        let n1 = axis_nodes(spec1, h);
        let n2 = axis_nodes(spec2, h);
        let mut acc = Accumulator::new(cfg.working_mode);
        for t1 in &n1 {
            let s1 = Complex64::new(spec1.abscissa, *t1);
            let mut row = Accumulator::new(cfg.working_mode);
            for t2 in &n2 {
                let s2 = Complex64::new(spec2.abscissa, *t2);
                row.add(g(s1, s2));
            }
            acc.add(row.total());
        }
        value = acc.total() * (h * h / (4.0 * PI * PI));
        if std::env::var_os("GSP4_TRACE").is_some() {
            eprintln!(
                "contour_double: h={h} grid={}x{} value={value:?}",
                n1.len(),
                n2.len()
            );
        }
        if let Some(p) = prev {
            err = (value - p).norm();
            let scale = value.norm().max(f64::MIN_POSITIVE);
            if err <= cfg.target_rel_tol * scale {
                break;
            }
        }
        if n1.len() * 2 > cfg.max_nodes || n2.len() * 2 > cfg.max_nodes {
            break;
        }
        prev = Some(value);
        h *= 0.5;
    }

    Ok(ContourEstimate {
        value,
        abs_err: err,
        tail_estimate: 0.0,
        tail_flagged: false,
    })
}

/// Chooses a truncation height adaptively: extends T until |g(c±iT)| has
/// fallen below `drop` times the largest magnitude seen on the line.
pub fn adaptive_height(g: impl Fn(Complex64) -> Complex64, c: f64, drop: f64) -> f64 {
    let mut max_seen: f64 = 0.0;
    let mut t = 2.0f64;
    loop {
        let m = g(Complex64::new(c, t))
            .norm()
            .max(g(Complex64::new(c, -t)).norm());
        max_seen = max_seen.max(m);
        if (t >= 8.0 && m <= drop * max_seen.max(f64::MIN_POSITIVE)) || t >= 220.0 {
            return t + 2.0;
        }
        t += 2.0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special;

    fn cfg() -> PrecisionConfig {
        PrecisionConfig::default()
    }

    #[test]
    fn halfline_exponential() {
        let rule = QuadratureRule::halfline(64);
        let est = integrate_halfline(|t| (-t).exp(), &rule, &cfg()).unwrap();
        assert!((est.value - 1.0).abs() < 1e-12, "got {}", est.value);
    }

    #[test]
    fn halfline_gaussian_moment() {
        let rule = QuadratureRule::halfline(64);
        let est = integrate_halfline(|t| t * (-t * t).exp(), &rule, &cfg()).unwrap();
        assert!((est.value - 0.5).abs() < 1e-12, "got {}", est.value);
    }

    #[test]
    fn halfline_bessel_half_integer() {
        // ∫_0^∞ e^{-x(t+1/t)/2} t^{ν-1} dt / 2 at ν=1/2, x=1 equals
        // K_{1/2}(1) = sqrt(π/2)·e^{-1}.
        let rule = QuadratureRule::halfline(64);
        let est = integrate_halfline(
            |t| 0.5 * (-0.5 * (t + 1.0 / t)).exp() * t.powf(-0.5),
            &rule,
            &cfg(),
        )
        .unwrap();
        let expected = (PI / 2.0f64).sqrt() * (-1.0f64).exp();
        assert!(
            (est.value - expected).abs() < 1e-12 * expected,
            "got {} want {expected}",
            est.value
        );
    }

    #[test]
    fn halfline_nonconvergence_reports_estimates() {
        let tight = PrecisionConfig::new(1e-14, 16, WorkingMode::Double).unwrap();
        let rule = QuadratureRule::halfline(64);
        let res = integrate_halfline(|t| (1.0 + t * t).recip(), &rule, &tight);
        match res {
            Err(Error::NoConvergence { prev, last, .. }) => {
                assert!(prev.is_finite() && last.is_finite());
            }
            other => panic!("expected NoConvergence, got {other:?}"),
        }
    }

    #[test]
    fn hermite_gaussian() {
        let v = integrate_tensor_hermite(|_| 1.0, 24, 1).unwrap();
        assert!((v - PI.sqrt()).abs() < 1e-13);
    }

    #[test]
    fn hermite_product_moment() {
        let v = integrate_tensor_hermite(|x| x[0] * x[0] * x[1] * x[1], 24, 2).unwrap();
        assert!((v - PI / 4.0).abs() < 1e-12, "got {v}");
    }

    #[test]
    fn hermite_dimension_guard() {
        assert!(integrate_tensor_hermite(|_| 1.0, 8, 5).is_err());
    }

    #[test]
    fn hermite_polynomial_exactness() {
        // Degree 2·order-1 exactness, checked on monomials against
        // ∫ x^{2k} e^{-x²} dx = Γ(k + 1/2).
        for order in [3usize, 5, 8] {
            for k in 0..order {
                let v = integrate_tensor_hermite(|x| x[0].powi(2 * k as i32), order, 1).unwrap();
                let expected = special::gamma_real(k as f64 + 0.5);
                assert!(
                    (v - expected).abs() < 1e-11 * expected.abs(),
                    "order {order} moment {k}: got {v} want {expected}"
                );
            }
        }
    }

    #[test]
    fn hermite_four_dim_wick() {
        // Quartic polynomial against the Wick/moment expansion: for the
        // diagonal Gaussian weight the integral splits into 1-d moments
        // m(e) = Γ((e+1)/2) for even e, 0 for odd e.
        let m = |e: u32| -> f64 {
            if e % 2 == 1 {
                0.0
            } else {
                special::gamma_real(e as f64 / 2.0 + 0.5)
            }
        };
        let f = |x: &[f64]| {
            x[0].powi(2) * x[1].powi(2) + 3.0 * x[2].powi(4) - 2.0 * x[0] * x[1] * x[2] * x[3]
                + x[3].powi(2)
        };
        let expected = m(2) * m(2) * m(0) * m(0) + 3.0 * m(4) * m(0) * m(0) * m(0)
            - 2.0 * m(1) * m(1) * m(1) * m(1)
            + m(2) * m(0) * m(0) * m(0);
        let v = integrate_tensor_hermite(f, 12, 4).unwrap();
        assert!((v - expected).abs() < 1e-11 * expected.abs(), "got {v} want {expected}");
    }

    #[test]
    fn cahen_mellin_inversion() {
        // (1/2πi) ∫ Γ(s) x^{-s} ds = e^{-x} on any abscissa c > 0.
        let spec = ContourSpec::new(1.0, 40.0, 512).unwrap();
        for (x, expected) in [(1.0f64, (-1.0f64).exp()), (2.0, (-2.0f64).exp())] {
            let est = contour_line(
                |s| special::gamma(s).unwrap() * Complex64::new(x, 0.0).powc(-s),
                &spec,
                &cfg(),
            )
            .unwrap();
            assert!(
                (est.value.re - expected).abs() < 1e-11 * expected,
                "x={x}: got {} want {expected}",
                est.value
            );
            assert!(est.value.im.abs() < 1e-12);
        }
    }

    #[test]
    fn contour_shift_invariance() {
        // Shifting the abscissa within the pole-free strip leaves the
        // Cahen-Mellin value unchanged to tolerance.
        let g = |s: Complex64| special::gamma(s).unwrap() * Complex64::new(1.0, 0.0).powc(-s);
        let a = contour_line(&g, &ContourSpec::new(1.0, 40.0, 512).unwrap(), &cfg()).unwrap();
        let b = contour_line(&g, &ContourSpec::new(2.0, 40.0, 512).unwrap(), &cfg()).unwrap();
        assert!((a.value - b.value).norm() < 1e-11 * a.value.norm());
    }

    #[test]
    fn contour_determinism() {
        let g = |s: Complex64| special::gamma(s).unwrap() * Complex64::new(1.5, 0.0).powc(-s);
        let spec = ContourSpec::new(1.0, 30.0, 256).unwrap();
        let a = contour_line(&g, &spec, &cfg()).unwrap();
        let b = contour_line(&g, &spec, &cfg()).unwrap();
        assert_eq!(a.value.re.to_bits(), b.value.re.to_bits());
        assert_eq!(a.value.im.to_bits(), b.value.im.to_bits());
    }

    #[test]
    fn contour_abscissa_constraint() {
        let res = ContourSpec::new(-1.0, 30.0, 256)
            .unwrap()
            .check_abscissa(|c| c > 0.0, "c must be positive");
        assert!(res.is_err());
    }

    #[test]
    fn extended_mode_accumulation() {
        // The compensated accumulator recovers a sum that plain doubles lose.
        let mut plain = Accumulator::<f64>::new(WorkingMode::Double);
        let mut ext = Accumulator::<f64>::new(WorkingMode::Extended);
        let big = 1e16;
        for x in [big, 1.0, 1.0, 1.0, 1.0, -big] {
            plain.add(x);
            ext.add(x);
        }
        assert_eq!(ext.total(), 4.0);
        assert!(plain.total() == 4.0 || plain.total() == 0.0);
    }

    #[test]
    fn richardson_consistency_on_doubling() {
        // Doubling the node count changes a converged result by less than
        // the reported error estimate.
        let rule = QuadratureRule::halfline(64);
        let loose = PrecisionConfig::new(1e-8, 1 << 14, WorkingMode::Double).unwrap();
        let tight = PrecisionConfig::new(1e-13, 1 << 15, WorkingMode::Double).unwrap();
        let f = |t: f64| (t.sqrt()) * (-t).exp();
        let e1 = integrate_halfline(f, &rule, &loose).unwrap();
        let e2 = integrate_halfline(f, &rule, &tight).unwrap();
        assert!((e1.value - e2.value).abs() <= e1.abs_err * 1.5 + 1e-15);
    }
}
