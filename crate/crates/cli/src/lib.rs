//! Batch tooling around the `faddeeva` crate: error-map grids with the
//! componentwise relative errors Δ_Re and Δ_Im, reproducible run-time
//! benchmarks, and CSV emission. The binary in this package wraps these
//! into the `eval`, `grid` and `bench` subcommands.

use std::collections::BTreeMap;
use std::io::{self, Write};
use std::time::Instant;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use faddeeva::oracle::{chiarella_reichel_w, reference_w, salzer_w, OracleConfig, SalzerParams};
use faddeeva::{
    classify, dawson, erf, fresnel, normal_phi, plasma_dispersion, voigt_k, voigt_l, w,
    w_laplace_cf, w_rational, w_small_y, CoeffSet, DomainTag, DEFAULT_CF_DEPTH,
};

/// Reference component magnitudes below this leave the relative error
/// undefined; the grid records an absolute error and a skip reason.
pub const REF_UNDERFLOW_LIMIT: f64 = 1e-280;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("invalid grid: {0}")]
    Grid(&'static str),

    #[error("unknown function name '{0}'")]
    UnknownFunction(String),

    #[error("parameter error: {0}")]
    Param(String),

    #[error("reference oracle failed at ({x}, {y}): {source}")]
    Oracle {
        x: f64,
        y: f64,
        source: faddeeva::Error,
    },

    #[error("method failed at ({x}, {y}): {source}")]
    Method {
        x: f64,
        y: f64,
        source: faddeeva::Error,
    },

    #[error("i/o failure: {0}")]
    Io(#[from] io::Error),
}

impl HarnessError {
    /// Process exit code: 2 for usage/parameter errors, 3 for numeric or
    /// I/O failures.
    pub fn exit_code(&self) -> u8 {
        match self {
            HarnessError::Grid(_) | HarnessError::UnknownFunction(_) | HarnessError::Param(_) => 2,
            HarnessError::Oracle { .. } | HarnessError::Method { .. } | HarnessError::Io(_) => 3,
        }
    }
}

fn classify_core_error(x: f64, y: f64, e: faddeeva::Error) -> HarnessError {
    match e {
        faddeeva::Error::NonFiniteInput { .. }
        | faddeeva::Error::InvalidParam(_)
        | faddeeva::Error::NegativeImag { .. }
        | faddeeva::Error::OutOfDomain { .. } => HarnessError::Param(e.to_string()),
        _ => HarnessError::Method { x, y, source: e },
    }
}

// ---------------------------------------------------------------------
// grids

/// Rectangular evaluation grid. Points are x_i = x_min + i·Δx with
/// Δx = (x_max - x_min)/(nx - 1), and likewise in y.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub x_min: f64,
    pub x_max: f64,
    pub y_min: f64,
    pub y_max: f64,
    pub nx: usize,
    pub ny: usize,
}

impl GridSpec {
    pub fn validate(&self) -> Result<(), HarnessError> {
        if !(self.x_min.is_finite() && self.x_max.is_finite() && self.x_min < self.x_max) {
            return Err(HarnessError::Grid("x_min must be finite and < x_max"));
        }
        if !(self.y_min.is_finite() && self.y_max.is_finite() && self.y_min < self.y_max) {
            return Err(HarnessError::Grid("y_min must be finite and < y_max"));
        }
        if self.nx < 1 || self.ny < 1 {
            return Err(HarnessError::Grid("nx and ny must be positive"));
        }
        Ok(())
    }

    pub fn x(&self, i: usize) -> f64 {
        if self.nx == 1 {
            self.x_min
        } else {
            self.x_min + i as f64 * (self.x_max - self.x_min) / (self.nx - 1) as f64
        }
    }

    pub fn y(&self, j: usize) -> f64 {
        if self.ny == 1 {
            self.y_min
        } else {
            self.y_min + j as f64 * (self.y_max - self.y_min) / (self.ny - 1) as f64
        }
    }

    pub fn len(&self) -> usize {
        self.nx * self.ny
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Which approximation an error map exercises.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MethodUnderTest {
    Dispatch,
    Rational,
    SmallY,
    LaplaceCf,
    Salzer(SalzerParams),
    Chiarella { step: f64 },
}

impl MethodUnderTest {
    pub fn label(&self) -> &'static str {
        match self {
            MethodUnderTest::Dispatch => "dispatch",
            MethodUnderTest::Rational => "rational",
            MethodUnderTest::SmallY => "small_y",
            MethodUnderTest::LaplaceCf => "laplace_cf",
            MethodUnderTest::Salzer(_) => "salzer",
            MethodUnderTest::Chiarella { .. } => "chiarella",
        }
    }

    fn evaluate(&self, z: Complex64) -> Result<Complex64, faddeeva::Error> {
        match self {
            MethodUnderTest::Dispatch => w(z),
            MethodUnderTest::Rational => Ok(w_rational(z, CoeffSet::operating_point())),
            MethodUnderTest::SmallY => Ok(w_small_y(z, CoeffSet::operating_point())),
            MethodUnderTest::LaplaceCf => Ok(w_laplace_cf(z, DEFAULT_CF_DEPTH)),
            MethodUnderTest::Salzer(params) => {
                if z.im < 0.0 {
                    return Err(faddeeva::Error::NegativeImag { y: z.im });
                }
                Ok(salzer_w(z.re, z.im, params))
            }
            MethodUnderTest::Chiarella { step } => chiarella_reichel_w(z, *step).map(|r| r.value),
        }
    }
}

/// Why a grid component carries an absolute instead of a relative error.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SkipReason {
    /// Reference component magnitude below [`REF_UNDERFLOW_LIMIT`].
    RefUnderflow,
    /// The x = 0 column, where the imaginary reference is identically 0.
    RefZeroIm,
    /// The method has a pole at this grid point.
    MethodPole,
}

impl SkipReason {
    pub fn token(&self) -> &'static str {
        match self {
            SkipReason::RefUnderflow => "ref_underflow",
            SkipReason::RefZeroIm => "ref_zero_im",
            SkipReason::MethodPole => "method_pole",
        }
    }
}

/// Componentwise relative errors over a grid. At skipped components the
/// delta arrays hold the absolute error instead (NaN for method poles);
/// all summary statistics exclude them.
#[derive(Debug, Clone)]
pub struct ErrorGrid {
    spec: GridSpec,
    delta_re: Vec<f64>,
    delta_im: Vec<f64>,
    skip_re: BTreeMap<usize, SkipReason>,
    skip_im: BTreeMap<usize, SkipReason>,
}

impl ErrorGrid {
    pub fn spec(&self) -> &GridSpec {
        &self.spec
    }
    pub fn delta_re(&self) -> &[f64] {
        &self.delta_re
    }
    pub fn delta_im(&self) -> &[f64] {
        &self.delta_im
    }
    pub fn skip_reason_re(&self, idx: usize) -> Option<SkipReason> {
        self.skip_re.get(&idx).copied()
    }
    pub fn skip_reason_im(&self, idx: usize) -> Option<SkipReason> {
        self.skip_im.get(&idx).copied()
    }

    /// Point indices with any skipped component, with the first
    /// applicable reason.
    pub fn skipped(&self) -> impl Iterator<Item = (usize, SkipReason)> + '_ {
        let ims = self
            .skip_im
            .iter()
            .filter(move |(idx, _)| !self.skip_re.contains_key(idx));
        self.skip_re
            .iter()
            .chain(ims)
            .map(|(idx, reason)| (*idx, *reason))
    }

    pub fn point(&self, idx: usize) -> (f64, f64) {
        (self.spec.x(idx % self.spec.nx), self.spec.y(idx / self.spec.nx))
    }

    pub fn summary(&self) -> GridSummary {
        let mut s = GridSummary::default();
        for idx in 0..self.spec.len() {
            let (x, y) = self.point(idx);
            if self.skip_re.contains_key(&idx) {
                s.skipped += 1;
                if self.delta_re[idx].is_finite() {
                    s.skipped_abs_max = s.skipped_abs_max.max(self.delta_re[idx]);
                }
            } else {
                let d = self.delta_re[idx];
                s.mean_re += d;
                s.count_re += 1;
                if d > s.max_re {
                    s.max_re = d;
                    s.argmax_re = (x, y);
                }
            }
            if self.skip_im.contains_key(&idx) {
                s.skipped += 1;
                if self.delta_im[idx].is_finite() {
                    s.skipped_abs_max = s.skipped_abs_max.max(self.delta_im[idx]);
                }
            } else {
                let d = self.delta_im[idx];
                s.mean_im += d;
                s.count_im += 1;
                if d > s.max_im {
                    s.max_im = d;
                    s.argmax_im = (x, y);
                }
            }
        }
        if s.count_re > 0 {
            s.mean_re /= s.count_re as f64;
        }
        if s.count_im > 0 {
            s.mean_im /= s.count_im as f64;
        }
        s
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct GridSummary {
    pub max_re: f64,
    pub argmax_re: (f64, f64),
    pub mean_re: f64,
    pub count_re: usize,
    pub max_im: f64,
    pub argmax_im: (f64, f64),
    pub mean_im: f64,
    pub count_im: usize,
    /// Number of skipped components.
    pub skipped: usize,
    /// Largest recorded absolute error among skipped components.
    pub skipped_abs_max: f64,
}

impl std::fmt::Display for GridSummary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(
            f,
            "delta_re: max {:.3e} at ({:.6}, {:.6}), mean {:.3e} over {} points",
            self.max_re, self.argmax_re.0, self.argmax_re.1, self.mean_re, self.count_re
        )?;
        write!(
            f,
            "delta_im: max {:.3e} at ({:.6}, {:.6}), mean {:.3e} over {} points",
            self.max_im, self.argmax_im.0, self.argmax_im.1, self.mean_im, self.count_im
        )?;
        if self.skipped > 0 {
            write!(
                f,
                "\nskipped components: {} (abs-error max {:.3e})",
                self.skipped, self.skipped_abs_max
            )?;
        }
        Ok(())
    }
}

/// Pointwise Δ_Re, Δ_Im of a method against a reference over a grid.
/// Rows are evaluated in parallel; assembly is order-preserving, so the
/// result is deterministic regardless of worker count. A reference
/// failure aborts with a diagnostic naming the point.
pub fn error_map(
    spec: &GridSpec,
    method: &MethodUnderTest,
    reference: &OracleConfig,
) -> Result<ErrorGrid, HarnessError> {
    spec.validate()?;
    let rows: Result<Vec<_>, HarnessError> = (0..spec.ny)
        .into_par_iter()
        .map(|j| {
            let y = spec.y(j);
            let mut drow = Vec::with_capacity(spec.nx);
            for i in 0..spec.nx {
                let x = spec.x(i);
                let z = Complex64::new(x, y);
                let reference_value = reference_w(z, reference)
                    .map_err(|source| HarnessError::Oracle { x, y, source })?;
                let entry = match method.evaluate(z) {
                    Ok(value) => point_errors(x, reference_value, value),
                    Err(faddeeva::Error::PoleHit { .. }) => PointErrors {
                        delta_re: f64::NAN,
                        delta_im: f64::NAN,
                        skip_re: Some(SkipReason::MethodPole),
                        skip_im: Some(SkipReason::MethodPole),
                    },
                    Err(source) => return Err(HarnessError::Method { x, y, source }),
                };
                drow.push(entry);
            }
            Ok(drow)
        })
        .collect();
    let rows = rows?;

    let mut grid = ErrorGrid {
        spec: *spec,
        delta_re: Vec::with_capacity(spec.len()),
        delta_im: Vec::with_capacity(spec.len()),
        skip_re: BTreeMap::new(),
        skip_im: BTreeMap::new(),
    };
    for row in rows {
        for entry in row {
            let idx = grid.delta_re.len();
            grid.delta_re.push(entry.delta_re);
            grid.delta_im.push(entry.delta_im);
            if let Some(r) = entry.skip_re {
                grid.skip_re.insert(idx, r);
            }
            if let Some(r) = entry.skip_im {
                grid.skip_im.insert(idx, r);
            }
        }
    }
    Ok(grid)
}

struct PointErrors {
    delta_re: f64,
    delta_im: f64,
    skip_re: Option<SkipReason>,
    skip_im: Option<SkipReason>,
}

fn point_errors(x: f64, reference: Complex64, value: Complex64) -> PointErrors {
    let component = |ref_c: f64, val_c: f64, is_im: bool| -> (f64, Option<SkipReason>) {
        if ref_c.abs() < REF_UNDERFLOW_LIMIT {
            let reason = if is_im && x == 0.0 {
                SkipReason::RefZeroIm
            } else {
                SkipReason::RefUnderflow
            };
            ((ref_c - val_c).abs(), Some(reason))
        } else {
            (((ref_c - val_c) / ref_c).abs(), None)
        }
    };
    let (delta_re, skip_re) = component(reference.re, value.re, false);
    let (delta_im, skip_im) = component(reference.im, value.im, true);
    PointErrors {
        delta_re,
        delta_im,
        skip_re,
        skip_im,
    }
}

/// Plain values of a method over a grid.
#[derive(Debug, Clone)]
pub struct ValueGrid {
    pub spec: GridSpec,
    pub values: Vec<Complex64>,
}

pub fn value_grid(spec: &GridSpec, method: &MethodUnderTest) -> Result<ValueGrid, HarnessError> {
    spec.validate()?;
    let mut values = Vec::with_capacity(spec.len());
    for j in 0..spec.ny {
        for i in 0..spec.nx {
            let (x, y) = (spec.x(i), spec.y(j));
            let v = method
                .evaluate(Complex64::new(x, y))
                .map_err(|source| HarnessError::Method { x, y, source })?;
            values.push(v);
        }
    }
    Ok(ValueGrid { spec: *spec, values })
}

// ---------------------------------------------------------------------
// CSV emission

/// `x,y,re,im` rows in row-major order with y as the outer loop,
/// floating-point fields with 17 significant digits.
pub fn write_value_csv<W: Write>(grid: &ValueGrid, mut out: W) -> io::Result<()> {
    writeln!(out, "x,y,re,im")?;
    for j in 0..grid.spec.ny {
        for i in 0..grid.spec.nx {
            let v = grid.values[j * grid.spec.nx + i];
            writeln!(
                out,
                "{:.16e},{:.16e},{:.16e},{:.16e}",
                grid.spec.x(i),
                grid.spec.y(j),
                v.re,
                v.im
            )?;
        }
    }
    Ok(())
}

/// `x,y,delta_re,delta_im,skip` rows; the skip column is empty or a
/// reason token.
pub fn write_error_csv<W: Write>(grid: &ErrorGrid, mut out: W) -> io::Result<()> {
    writeln!(out, "x,y,delta_re,delta_im,skip")?;
    let spec = grid.spec();
    for j in 0..spec.ny {
        for i in 0..spec.nx {
            let idx = j * spec.nx + i;
            let token = grid
                .skip_reason_re(idx)
                .or_else(|| grid.skip_reason_im(idx))
                .map(|r| r.token())
                .unwrap_or("");
            writeln!(
                out,
                "{:.16e},{:.16e},{:.16e},{:.16e},{}",
                spec.x(i),
                spec.y(j),
                grid.delta_re()[idx],
                grid.delta_im()[idx],
                token
            )?;
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------
// benchmarks

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BenchDomain {
    /// 0 < x < 6, 0 < y < 0.1
    Band,
    /// 0 < x, y < 15
    Box15,
    /// 0 < x, y < 10000
    Box10k,
}

impl BenchDomain {
    pub fn label(&self) -> &'static str {
        match self {
            BenchDomain::Band => "band",
            BenchDomain::Box15 => "box15",
            BenchDomain::Box10k => "box10k",
        }
    }

    fn ranges(&self) -> ((f64, f64), (f64, f64)) {
        match self {
            BenchDomain::Band => ((0.0, 6.0), (0.0, 0.1)),
            BenchDomain::Box15 => ((0.0, 15.0), (0.0, 15.0)),
            BenchDomain::Box10k => ((0.0, 10000.0), (0.0, 10000.0)),
        }
    }
}

#[derive(Debug, Clone)]
pub struct BenchReport {
    pub count: usize,
    pub domain_label: &'static str,
    pub seed: u64,
    /// Wall time of the mixed dispatch pass over all points.
    pub elapsed_seconds: f64,
    pub evals_per_second: f64,
    /// Per-region (count, seconds) from separate single-region passes.
    pub per_region: Vec<(DomainTag, usize, f64)>,
}

impl std::fmt::Display for BenchReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(
            f,
            "bench: domain={} count={} seed={}",
            self.domain_label, self.count, self.seed
        )?;
        writeln!(
            f,
            "elapsed {:.6} s, {:.3e} evals/s ({:.2} ns/eval)",
            self.elapsed_seconds,
            self.evals_per_second,
            1e9 * self.elapsed_seconds / self.count.max(1) as f64
        )?;
        for (tag, n, secs) in &self.per_region {
            let share = 100.0 * *n as f64 / self.count.max(1) as f64;
            writeln!(
                f,
                "  {:<15} {:>10} points ({:5.2}%)  {:.6} s",
                tag.label(),
                n,
                share,
                secs
            )?;
        }
        Ok(())
    }
}

/// Evaluates the dispatcher over `count` seeded uniform points and
/// reports totals plus a per-region breakdown. Point generation and
/// coefficient precomputation happen before the timed sections; the
/// timed sections do no accuracy work.
pub fn bench(count: usize, domain: BenchDomain, seed: u64) -> BenchReport {
    let ((x_lo, x_hi), (y_lo, y_hi)) = domain.ranges();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let points: Vec<Complex64> = (0..count)
        .map(|_| Complex64::new(rng.gen_range(x_lo..x_hi), rng.gen_range(y_lo..y_hi)))
        .collect();

    // force the one-time table build outside the timers
    let _ = CoeffSet::operating_point();

    let mut by_region: BTreeMap<&'static str, (DomainTag, Vec<Complex64>)> = BTreeMap::new();
    for &z in &points {
        let tag = classify(z).expect("bench points are finite and y > 0");
        by_region
            .entry(tag.label())
            .or_insert_with(|| (tag, Vec::new()))
            .1
            .push(z);
    }

    let start = Instant::now();
    for &z in &points {
        std::hint::black_box(w(z).expect("bench points are finite"));
    }
    let elapsed = start.elapsed().as_secs_f64();

    let mut per_region = Vec::new();
    for (_, (tag, zs)) in by_region {
        let start = Instant::now();
        for &z in &zs {
            std::hint::black_box(w(z).expect("bench points are finite"));
        }
        per_region.push((tag, zs.len(), start.elapsed().as_secs_f64()));
    }

    BenchReport {
        count,
        domain_label: domain.label(),
        seed,
        elapsed_seconds: elapsed,
        evals_per_second: count as f64 / elapsed.max(1e-12),
        per_region,
    }
}

// ---------------------------------------------------------------------
// point evaluation

/// Evaluates the named function at z = x + iy. Real-valued functions
/// report a zero imaginary part.
pub fn eval_point(x: f64, y: f64, func: &str) -> Result<Complex64, HarnessError> {
    if !x.is_finite() || !y.is_finite() {
        return Err(HarnessError::Param(format!(
            "coordinates must be finite, got ({x}, {y})"
        )));
    }
    let z = Complex64::new(x, y);
    let map = |r: Result<Complex64, faddeeva::Error>| {
        r.map_err(|e| classify_core_error(x, y, e))
    };
    match func {
        "w" => map(w(z)),
        "dawson" => map(dawson(z)),
        "erf" => map(erf(z)),
        "voigt_k" => voigt_k(x, y)
            .map(|v| Complex64::new(v, 0.0))
            .map_err(|e| classify_core_error(x, y, e)),
        "voigt_l" => voigt_l(x, y)
            .map(|v| Complex64::new(v, 0.0))
            .map_err(|e| classify_core_error(x, y, e)),
        "z" => map(plasma_dispersion(z)),
        "fresnel" => map(fresnel(z)),
        "phi" => map(normal_phi(z)),
        other => Err(HarnessError::UnknownFunction(other.to_string())),
    }
}

/// The output format of the eval subcommand: both parts with 17
/// significant digits.
pub fn format_value(v: Complex64) -> String {
    format!("{:.16e} {:.16e}", v.re, v.im)
}
