//! Bit-exact fixed-point FIR arithmetic.
//!
//! Everything here operates on raw two's-complement integers: a `B`-bit
//! sample contributes bit `j` with weight `2^j` and its sign bit with weight
//! `-2^(B-1)`. The fractional interpretation common in DSP texts is carried
//! only as [`QuantizedFilter::scale_exponent`] metadata, so direct-form and
//! distributed-arithmetic evaluations can be compared for exact integer
//! equality.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::Result;

/// ceil(log2(x)) with the convention ceil(log2(1)) == 0.
pub fn ceil_log2(x: u64) -> u32 {
    assert!(x >= 1, "ceil_log2 domain is x >= 1");
    if x <= 1 {
        0
    } else {
        u64::BITS - (x - 1).leading_zeros()
    }
}

/// Inclusive range of a signed `width`-bit two's-complement value.
fn signed_range(width: u32) -> (i64, i64) {
    debug_assert!(width >= 1 && width <= 62);
    (-(1i64 << (width - 1)), (1i64 << (width - 1)) - 1)
}

/// An FIR filter's quantized coefficients: `N` taps of `C`-bit
/// two's-complement integers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuantizedFilter {
    coefficients: Vec<i64>,
    coef_width: u32,
    /// Power-of-two factor relating the stored integers to the designed real
    /// coefficients; metadata only, never used in arithmetic.
    scale_exponent: i32,
}

impl QuantizedFilter {
    pub fn new(coefficients: Vec<i64>, coef_width: u32, scale_exponent: i32) -> Result<Self> {
        if coefficients.is_empty() {
            return Err(Error::Domain("filter must have at least one tap".into()));
        }
        if coef_width < 1 || coef_width > 62 {
            return Err(Error::Domain(format!(
                "coefficient width {coef_width} out of supported range [1, 62]"
            )));
        }
        let (lo, hi) = signed_range(coef_width);
        for (i, &c) in coefficients.iter().enumerate() {
            if c < lo || c > hi {
                return Err(Error::Domain(format!(
                    "coefficient {c} at tap {i} does not fit {coef_width} bits"
                )));
            }
        }
        Ok(Self { coefficients, coef_width, scale_exponent })
    }

    /// Number of taps (`N`).
    pub fn order_n(&self) -> usize {
        self.coefficients.len()
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coefficients
    }

    pub fn coef_width(&self) -> u32 {
        self.coef_width
    }

    pub fn scale_exponent(&self) -> i32 {
        self.scale_exponent
    }

    /// Accumulator width that provably holds any output: `C + B + ceil(log2 N)`.
    pub fn output_width(&self, input_width: u32) -> u32 {
        self.coef_width + input_width + ceil_log2(self.order_n() as u64)
    }
}

/// A window of the `N` most recent input samples; index 0 is the newest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleWindow {
    samples: Vec<i64>,
    input_width: u32,
}

impl SampleWindow {
    pub fn new(samples: Vec<i64>, input_width: u32) -> Result<Self> {
        if samples.is_empty() {
            return Err(Error::Domain("sample window must not be empty".into()));
        }
        if input_width < 1 || input_width > 62 {
            return Err(Error::Domain(format!(
                "input width {input_width} out of supported range [1, 62]"
            )));
        }
        let (lo, hi) = signed_range(input_width);
        for (i, &s) in samples.iter().enumerate() {
            if s < lo || s > hi {
                return Err(Error::Domain(format!(
                    "sample {s} at index {i} does not fit {input_width} bits"
                )));
            }
        }
        Ok(Self { samples, input_width })
    }

    pub fn samples(&self) -> &[i64] {
        &self.samples
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn input_width(&self) -> u32 {
        self.input_width
    }
}

/// The window's samples sliced into bit planes: plane `j`, position `i` holds
/// bit `j` of sample `x[t-i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitPlaneMatrix {
    planes: Vec<Vec<bool>>,
    msb_index: usize,
}

impl BitPlaneMatrix {
    /// Plane `j` across all taps.
    pub fn plane(&self, j: usize) -> &[bool] {
        &self.planes[j]
    }

    pub fn planes(&self) -> &[Vec<bool>] {
        &self.planes
    }

    /// Index of the sign plane (`B - 1`).
    pub fn msb_index(&self) -> usize {
        self.msb_index
    }

    /// Reassemble the signed sample at tap `i` from its bits.
    pub fn reconstruct_sample(&self, i: usize) -> i64 {
        let mut value = 0i64;
        for (j, plane) in self.planes.iter().enumerate() {
            if plane[i] {
                let weight = 1i64 << j;
                if j == self.msb_index {
                    value -= weight;
                } else {
                    value += weight;
                }
            }
        }
        value
    }
}

/// A filter output value together with the accumulator width that bounds it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FilterOutput {
    pub value: i64,
    pub width: u32,
}

fn check_window(filter: &QuantizedFilter, window: &SampleWindow) -> Result<()> {
    if window.len() != filter.order_n() {
        return Err(Error::Dimension {
            expected: filter.order_n(),
            actual: window.len(),
            what: "sample window length",
        });
    }
    Ok(())
}

/// Direct-form evaluation: the exact integer inner product of the
/// coefficients with the sample window.
pub fn direct_fir(filter: &QuantizedFilter, window: &SampleWindow) -> Result<FilterOutput> {
    check_window(filter, window)?;
    let value = filter
        .coefficients
        .iter()
        .zip(window.samples())
        .map(|(&c, &x)| c * x)
        .sum();
    Ok(FilterOutput { value, width: filter.output_width(window.input_width()) })
}

/// Slice a window into its bit planes.
pub fn bit_decompose(window: &SampleWindow) -> BitPlaneMatrix {
    let b = window.input_width() as usize;
    let planes = (0..b)
        .map(|j| {
            window
                .samples()
                .iter()
                .map(|&s| (s >> j) & 1 == 1)
                .collect()
        })
        .collect();
    BitPlaneMatrix { planes, msb_index: b - 1 }
}

/// Sum of the coefficients selected by one plane's bits.
pub fn partial_sum(filter: &QuantizedFilter, plane_bits: &[bool]) -> Result<i64> {
    if plane_bits.len() != filter.order_n() {
        return Err(Error::Dimension {
            expected: filter.order_n(),
            actual: plane_bits.len(),
            what: "plane bit vector length",
        });
    }
    Ok(filter
        .coefficients
        .iter()
        .zip(plane_bits)
        .filter(|(_, &bit)| bit)
        .map(|(&c, _)| c)
        .sum())
}

/// Distributed-arithmetic evaluation: per-plane partial sums accumulated with
/// weights `2^j`, the sign plane subtracted with weight `2^(B-1)`.
///
/// Agrees exactly with [`direct_fir`] on every legal input.
pub fn da_fir(filter: &QuantizedFilter, window: &SampleWindow) -> Result<FilterOutput> {
    check_window(filter, window)?;
    let planes = bit_decompose(window);
    let msb = planes.msb_index();
    let mut value = 0i64;
    for (j, plane) in planes.planes().iter().enumerate() {
        let ps = partial_sum(filter, plane)?;
        let weight = 1i64 << j;
        if j == msb {
            value -= ps * weight;
        } else {
            value += ps * weight;
        }
    }
    Ok(FilterOutput { value, width: filter.output_width(window.input_width()) })
}
