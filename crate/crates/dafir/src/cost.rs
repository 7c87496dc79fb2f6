//! Gate-level cost abstractions.
//!
//! All delays are in abstract gate-delay units (one XOR gate = 2 units) and
//! all powers in XOR-equivalent units. Costs are exact rationals so that
//! dynamic-programming comparisons and tie-breaks never depend on float
//! rounding.
//!
//! The built-in defaults are engineering estimates parameterized the same way
//! real characterization data would be; every number can be overridden from a
//! JSON cost configuration (see [`load_cost_config`]).

use std::fmt;

use num_rational::Ratio;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::fir::ceil_log2;
use crate::Result;

/// Exact rational cost value.
pub type Cost = Ratio<i64>;

/// Render a cost for reports; exact rationals are emitted as their nearest
/// double, which is exact for all the defaults.
pub fn cost_to_f64(c: Cost) -> f64 {
    c.to_f64().unwrap_or(f64::NAN)
}

/// Parse a decimal or fraction literal ("4", "0.25", "3/7", "1e-2") into an
/// exact rational.
pub fn parse_cost(text: &str) -> Option<Cost> {
    let text = text.trim();
    if let Some((num, den)) = text.split_once('/') {
        let n: i64 = num.trim().parse().ok()?;
        let d: i64 = den.trim().parse().ok()?;
        if d == 0 {
            return None;
        }
        return Some(Ratio::new(n, d));
    }
    let (mantissa, exp) = match text.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i32>().ok()?),
        None => (text, 0),
    };
    let (int_part, frac_part) = match mantissa.split_once('.') {
        Some((i, f)) => (i, f),
        None => (mantissa, ""),
    };
    let negative = int_part.starts_with('-');
    let digits: String = int_part
        .trim_start_matches(['-', '+'])
        .chars()
        .chain(frac_part.chars())
        .collect();
    if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    let value: i64 = digits.parse().ok()?;
    let scale = exp - frac_part.len() as i32;
    let mut ratio = Ratio::from_integer(if negative { -value } else { value });
    if scale >= 0 {
        ratio *= Ratio::from_integer(10i64.checked_pow(scale as u32)?);
    } else {
        ratio /= Ratio::from_integer(10i64.checked_pow((-scale) as u32)?);
    }
    Some(ratio)
}

/// A (delay, power) pair in the model's abstract units.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct CostPoint {
    pub delay: Cost,
    pub power: Cost,
}

impl CostPoint {
    pub fn new(delay: Cost, power: Cost) -> Self {
        Self { delay, power }
    }

    pub fn zero() -> Self {
        Self { delay: Cost::zero(), power: Cost::zero() }
    }

    /// Power-delay product.
    pub fn pdp(&self) -> Cost {
        self.delay * self.power
    }

    /// `self` dominates `other` if it is no worse in both coordinates and
    /// strictly better in at least one.
    pub fn dominates(&self, other: &CostPoint) -> bool {
        self.delay <= other.delay
            && self.power <= other.power
            && (self.delay < other.delay || self.power < other.power)
    }
}

impl fmt::Display for CostPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(delay {}, power {})", cost_to_f64(self.delay), cost_to_f64(self.power))
    }
}

impl Serialize for CostPoint {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            delay: f64,
            power: f64,
            pdp: f64,
        }
        Repr {
            delay: cost_to_f64(self.delay),
            power: cost_to_f64(self.power),
            pdp: cost_to_f64(self.pdp()),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CostPoint {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            delay: f64,
            power: f64,
            #[serde(default)]
            #[allow(dead_code)]
            pdp: Option<f64>,
        }
        let repr = Repr::deserialize(deserializer)?;
        let conv = |v: f64| {
            parse_cost(&format!("{v}"))
                .ok_or_else(|| D::Error::custom(format!("cost value {v} not representable")))
        };
        Ok(CostPoint { delay: conv(repr.delay)?, power: conv(repr.power)? })
    }
}

/// Optimization objective selected by the caller.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Objective {
    Delay,
    Power,
    Pdp,
}

impl Objective {
    pub fn value(&self, point: &CostPoint) -> Cost {
        match self {
            Self::Delay => point.delay,
            Self::Power => point.power,
            Self::Pdp => point.pdp(),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::Delay => "delay",
            Self::Power => "power",
            Self::Pdp => "pdp",
        }
    }
}

impl std::str::FromStr for Objective {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "delay" => Ok(Self::Delay),
            "power" => Ok(Self::Power),
            "pdp" => Ok(Self::Pdp),
            other => Err(Error::Domain(format!(
                "unknown objective {other:?}; expected delay, power, or pdp"
            ))),
        }
    }
}

/// Decoder-plus-memory cost model for a basic LUT, indexed by address bits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LutCostModel {
    delays: Vec<Cost>,
    powers: Vec<Cost>,
}

impl LutCostModel {
    pub fn new(delays: Vec<Cost>, powers: Vec<Cost>) -> Result<Self> {
        let model = Self { delays, powers };
        model.validate()?;
        Ok(model)
    }

    /// Default model for `C`-bit words with address bits up to `max_addr_bits`:
    /// delay `2 + 2*ceil(log2(max(k,2)))`, power `2^k/10 + 2^k*(C + ceil(log2 k))/50`.
    pub fn default_model(coef_width: u32, max_addr_bits: u32) -> Self {
        let mut delays = Vec::new();
        let mut powers = Vec::new();
        for k in 1..=max_addr_bits as u64 {
            delays.push(Cost::from_integer(2 + 2 * ceil_log2(k.max(2)) as i64));
            let entries = 1i64 << k;
            let word = coef_width as i64 + ceil_log2(k) as i64;
            powers.push(Ratio::new(entries, 10) + Ratio::new(entries * word, 50));
        }
        Self { delays, powers }
    }

    fn validate(&self) -> Result<()> {
        if self.delays.is_empty() || self.delays.len() != self.powers.len() {
            return Err(Error::ConfigValidation {
                field: "lut".into(),
                message: "delay and power tables must be non-empty and equal length".into(),
            });
        }
        if self.delays.len() > 32 {
            return Err(Error::ConfigValidation {
                field: "lut".into(),
                message: "address-bit range larger than 32 is not supported".into(),
            });
        }
        for pair in self.delays.windows(2) {
            if pair[1] < pair[0] {
                return Err(Error::ConfigValidation {
                    field: "lut.delay".into(),
                    message: "delays must be non-decreasing in address bits".into(),
                });
            }
        }
        for pair in self.powers.windows(2) {
            if pair[1] <= pair[0] {
                return Err(Error::ConfigValidation {
                    field: "lut.power".into(),
                    message: "powers must be strictly increasing in address bits".into(),
                });
            }
        }
        if self.delays.iter().any(|d| d.is_negative()) || self.powers.iter().any(|p| p.is_negative())
        {
            return Err(Error::ConfigValidation {
                field: "lut".into(),
                message: "costs must be non-negative".into(),
            });
        }
        Ok(())
    }

    /// Largest supported address-bit count.
    pub fn max_addr_bits(&self) -> u32 {
        self.delays.len() as u32
    }

    pub fn delay(&self, addr_bits: u32) -> Result<Cost> {
        self.entry(&self.delays, addr_bits)
    }

    pub fn power(&self, addr_bits: u32) -> Result<Cost> {
        self.entry(&self.powers, addr_bits)
    }

    fn entry(&self, table: &[Cost], addr_bits: u32) -> Result<Cost> {
        if addr_bits < 1 {
            return Err(Error::Domain("address bits must be at least 1".into()));
        }
        table
            .get(addr_bits as usize - 1)
            .copied()
            .ok_or_else(|| Error::ModelRange(format!(
                "LUT cost table covers 1..={} address bits, got {addr_bits}",
                self.max_addr_bits()
            )))
    }

    /// Output word width of a `k`-input basic LUT holding `C`-bit sums.
    pub fn word_width(addr_bits: u32, coef_width: u32) -> u32 {
        coef_width + ceil_log2(addr_bits.max(1) as u64)
    }
}

/// One basic compressor available to the tree optimizer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompressorSpec {
    pub name: String,
    pub inputs: u32,
    pub outputs: u32,
    pub delay: Cost,
    pub power: Cost,
}

impl CompressorSpec {
    pub fn new(name: &str, inputs: u32, outputs: u32, delay: Cost, power: Cost) -> Self {
        Self { name: name.to_string(), inputs, outputs, delay, power }
    }

    fn validate(&self) -> Result<()> {
        if self.outputs < 2 || self.inputs <= self.outputs {
            return Err(Error::ConfigValidation {
                field: format!("catalog.{}", self.name),
                message: format!(
                    "outputs must be < inputs and >= 2, got {}:{}",
                    self.inputs, self.outputs
                ),
            });
        }
        if !self.delay.is_positive() || !self.power.is_positive() {
            return Err(Error::ConfigValidation {
                field: format!("catalog.{}", self.name),
                message: "delay and power must be positive".into(),
            });
        }
        Ok(())
    }
}

impl Serialize for CompressorSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            name: &'a str,
            inputs: u32,
            outputs: u32,
            delay: f64,
            power: f64,
        }
        Repr {
            name: &self.name,
            inputs: self.inputs,
            outputs: self.outputs,
            delay: cost_to_f64(self.delay),
            power: cost_to_f64(self.power),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CompressorSpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            name: String,
            inputs: u32,
            outputs: u32,
            delay: f64,
            power: f64,
        }
        let r = Repr::deserialize(deserializer)?;
        let conv = |v: f64| {
            parse_cost(&format!("{v}"))
                .ok_or_else(|| D::Error::custom(format!("cost value {v} not representable")))
        };
        Ok(CompressorSpec {
            name: r.name,
            inputs: r.inputs,
            outputs: r.outputs,
            delay: conv(r.delay)?,
            power: conv(r.power)?,
        })
    }
}

/// The complete cost model consumed by the optimizers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CostTables {
    pub lut: LutCostModel,
    pub catalog: Vec<CompressorSpec>,
    pub mux_delay: Cost,
    pub mux_power_per_bit: Cost,
    /// CLA delay = `cla_delay_base + cla_delay_per_level * ceil(log2 width)`.
    pub cla_delay_base: Cost,
    pub cla_delay_per_level: Cost,
    /// CLA power = `cla_power_per_bit * width`.
    pub cla_power_per_bit: Cost,
    pub coef_width: u32,
    pub input_width: u32,
}

/// Default LUT table range (address bits 1..=24).
pub const DEFAULT_MAX_ADDR_BITS: u32 = 24;

fn default_catalog() -> Vec<CompressorSpec> {
    let int = Cost::from_integer;
    vec![
        CompressorSpec::new("3:2", 3, 2, int(4), int(2)),
        CompressorSpec::new("4:2", 4, 2, int(6), int(4)),
        CompressorSpec::new("5:2", 5, 2, int(8), int(6)),
        CompressorSpec::new("6:2", 6, 2, int(9), int(8)),
        CompressorSpec::new("7:2", 7, 2, int(10), int(10)),
        CompressorSpec::new("9:2", 9, 2, int(12), int(14)),
    ]
}

impl Default for CostTables {
    fn default() -> Self {
        Self::with_widths(16, 3)
    }
}

impl CostTables {
    /// Default tables for the given coefficient and input widths.
    pub fn with_widths(coef_width: u32, input_width: u32) -> Self {
        Self {
            lut: LutCostModel::default_model(coef_width, DEFAULT_MAX_ADDR_BITS),
            catalog: default_catalog(),
            mux_delay: Cost::from_integer(2),
            mux_power_per_bit: Ratio::new(1, 2),
            cla_delay_base: Cost::from_integer(2),
            cla_delay_per_level: Cost::from_integer(2),
            cla_power_per_bit: Cost::from_integer(1),
            coef_width,
            input_width,
        }
    }

    /// Clone of these tables with a replacement compressor catalog; used for
    /// catalog-restricted optimizations. Does not re-validate.
    pub fn with_catalog(&self, catalog: Vec<CompressorSpec>) -> Self {
        Self { catalog, ..self.clone() }
    }

    /// The catalog entry acting as a plain full adder, if present.
    pub fn full_adder(&self) -> Option<&CompressorSpec> {
        self.catalog.iter().find(|c| c.inputs == 3 && c.outputs == 2)
    }

    pub fn validate(&self) -> Result<()> {
        self.lut.validate()?;
        if self.catalog.is_empty() {
            return Err(Error::ConfigValidation {
                field: "catalog".into(),
                message: "catalog must not be empty".into(),
            });
        }
        let mut names: Vec<&str> = self.catalog.iter().map(|c| c.name.as_str()).collect();
        names.sort_unstable();
        names.dedup();
        if names.len() != self.catalog.len() {
            return Err(Error::ConfigValidation {
                field: "catalog".into(),
                message: "catalog names must be unique".into(),
            });
        }
        for spec in &self.catalog {
            spec.validate()?;
        }
        // A 3-row reduction is only realizable by a 3:2 entry, and with one
        // present every h >= 3 is reachable; require it at load time.
        if self.full_adder().is_none() {
            return Err(Error::ConfigValidation {
                field: "catalog".into(),
                message: "catalog must contain a 3:2 entry so every row count is reducible".into(),
            });
        }
        if self.mux_delay.is_negative() || self.mux_power_per_bit.is_negative() {
            return Err(Error::ConfigValidation {
                field: "mux".into(),
                message: "mux costs must be non-negative".into(),
            });
        }
        if self.cla_delay_base.is_negative()
            || self.cla_delay_per_level.is_negative()
            || self.cla_power_per_bit.is_negative()
        {
            return Err(Error::ConfigValidation {
                field: "cla".into(),
                message: "adder cost coefficients must be non-negative".into(),
            });
        }
        if self.coef_width < 1 || self.coef_width > 62 || self.input_width < 1 || self.input_width > 62
        {
            return Err(Error::ConfigValidation {
                field: "widths".into(),
                message: "coef_width and input_width must be in [1, 62]".into(),
            });
        }
        Ok(())
    }
}

/// Storage bits of a dense LUT: `2^addr_bits * (coef_width + ceil(log2 addr_bits))`.
pub fn lut_size_bits(addr_bits: u32, coef_width: u32) -> Result<u64> {
    if addr_bits < 1 || coef_width < 1 {
        return Err(Error::Domain(
            "lut_size_bits requires addr_bits >= 1 and coef_width >= 1".into(),
        ));
    }
    if addr_bits > 57 {
        return Err(Error::Domain(format!("LUT with {addr_bits} address bits overflows u64")));
    }
    Ok((1u64 << addr_bits) * (coef_width as u64 + ceil_log2(addr_bits as u64) as u64))
}

/// Cost of the 2:1 mux layer gating `selector_count` coefficients. All muxes
/// switch in parallel, so the layer is one mux deep regardless of count.
pub fn mux_layer_cost(tables: &CostTables, selector_count: usize) -> CostPoint {
    if selector_count == 0 {
        return CostPoint::zero();
    }
    CostPoint::new(
        tables.mux_delay,
        Cost::from_integer(selector_count as i64 * tables.coef_width as i64)
            * tables.mux_power_per_bit,
    )
}

/// Cost of the final carry-lookahead adder at the given operand width.
pub fn cla_cost(tables: &CostTables, width: u32) -> Result<CostPoint> {
    if width < 1 {
        return Err(Error::Domain("adder width must be at least 1".into()));
    }
    let levels = Cost::from_integer(ceil_log2(width as u64) as i64);
    Ok(CostPoint::new(
        tables.cla_delay_base + tables.cla_delay_per_level * levels,
        tables.cla_power_per_bit * Cost::from_integer(width as i64),
    ))
}

// ---------------------------------------------------------------------------
// Configuration loading
// ---------------------------------------------------------------------------

/// Raw JSON number-or-string cost literal; strings allow exact fractions.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum CostLiteral {
    Number(f64),
    Text(String),
}

impl CostLiteral {
    fn to_cost(&self, field: &str) -> Result<Cost> {
        let text = match self {
            // Shortest round-trip formatting recovers the decimal the user
            // wrote, so "0.02" really becomes 1/50.
            Self::Number(v) => format!("{v}"),
            Self::Text(s) => s.clone(),
        };
        parse_cost(&text).ok_or_else(|| Error::ConfigValidation {
            field: field.to_string(),
            message: format!("cannot interpret {text:?} as an exact rational"),
        })
    }
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigDoc {
    #[serde(default)]
    widths: Option<WidthsDoc>,
    #[serde(default)]
    lut: Option<LutDoc>,
    #[serde(default)]
    catalog: Option<Vec<CatalogEntryDoc>>,
    #[serde(default)]
    mux: Option<MuxDoc>,
    #[serde(default)]
    cla: Option<ClaDoc>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct WidthsDoc {
    #[serde(default)]
    coef_width: Option<u32>,
    #[serde(default)]
    input_width: Option<u32>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct LutDoc {
    #[serde(default)]
    max_addr_bits: Option<u32>,
    #[serde(default)]
    delay: Option<Vec<CostLiteral>>,
    #[serde(default)]
    power: Option<Vec<CostLiteral>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct CatalogEntryDoc {
    name: String,
    #[serde(default)]
    inputs: Option<u32>,
    #[serde(default)]
    outputs: Option<u32>,
    #[serde(default)]
    delay: Option<CostLiteral>,
    #[serde(default)]
    power: Option<CostLiteral>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct MuxDoc {
    #[serde(default)]
    delay: Option<CostLiteral>,
    #[serde(default)]
    power_per_bit: Option<CostLiteral>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ClaDoc {
    #[serde(default)]
    delay_base: Option<CostLiteral>,
    #[serde(default)]
    delay_per_level: Option<CostLiteral>,
    #[serde(default)]
    power_per_bit: Option<CostLiteral>,
}

/// Parse and validate a JSON cost configuration. Absent fields take the
/// defaults; catalog entries merge with the default catalog by name; unknown
/// keys are rejected.
pub fn load_cost_config(document: &str) -> Result<CostTables> {
    let doc: ConfigDoc = if document.trim().is_empty() {
        ConfigDoc::default()
    } else {
        serde_json::from_str(document).map_err(|e| Error::ConfigSyntax(e.to_string()))?
    };

    let coef_width = doc.widths.as_ref().and_then(|w| w.coef_width).unwrap_or(16);
    let input_width = doc.widths.as_ref().and_then(|w| w.input_width).unwrap_or(3);
    let mut tables = CostTables::with_widths(coef_width, input_width);

    if let Some(lut) = &doc.lut {
        match (&lut.delay, &lut.power) {
            (Some(delay), Some(power)) => {
                let delays = delay
                    .iter()
                    .map(|v| v.to_cost("lut.delay"))
                    .collect::<Result<Vec<_>>>()?;
                let powers = power
                    .iter()
                    .map(|v| v.to_cost("lut.power"))
                    .collect::<Result<Vec<_>>>()?;
                tables.lut = LutCostModel { delays, powers };
            }
            (None, None) => {
                if let Some(max) = lut.max_addr_bits {
                    if max < 1 {
                        return Err(Error::ConfigValidation {
                            field: "lut.max_addr_bits".into(),
                            message: "must be at least 1".into(),
                        });
                    }
                    tables.lut = LutCostModel::default_model(coef_width, max);
                }
            }
            _ => {
                return Err(Error::ConfigValidation {
                    field: "lut".into(),
                    message: "delay and power tables must be given together".into(),
                });
            }
        }
        if lut.max_addr_bits.is_some() && lut.delay.is_some() {
            let max = lut.max_addr_bits.unwrap() as usize;
            if max != tables.lut.delays.len() {
                return Err(Error::ConfigValidation {
                    field: "lut.max_addr_bits".into(),
                    message: "disagrees with the explicit table length".into(),
                });
            }
        }
    }

    if let Some(entries) = &doc.catalog {
        for entry in entries {
            let existing = tables.catalog.iter_mut().find(|c| c.name == entry.name);
            match existing {
                Some(spec) => {
                    if let Some(i) = entry.inputs {
                        spec.inputs = i;
                    }
                    if let Some(o) = entry.outputs {
                        spec.outputs = o;
                    }
                    if let Some(d) = &entry.delay {
                        spec.delay = d.to_cost(&format!("catalog.{}.delay", entry.name))?;
                    }
                    if let Some(p) = &entry.power {
                        spec.power = p.to_cost(&format!("catalog.{}.power", entry.name))?;
                    }
                }
                None => {
                    // New entries may derive inputs:outputs from an "I:O" name.
                    let parsed = entry.name.split_once(':').and_then(|(i, o)| {
                        Some((i.parse::<u32>().ok()?, o.parse::<u32>().ok()?))
                    });
                    let inputs = entry.inputs.or(parsed.map(|p| p.0)).ok_or_else(|| {
                        Error::ConfigValidation {
                            field: format!("catalog.{}", entry.name),
                            message: "inputs required for a new catalog entry".into(),
                        }
                    })?;
                    let outputs = entry.outputs.or(parsed.map(|p| p.1)).ok_or_else(|| {
                        Error::ConfigValidation {
                            field: format!("catalog.{}", entry.name),
                            message: "outputs required for a new catalog entry".into(),
                        }
                    })?;
                    let delay = entry
                        .delay
                        .as_ref()
                        .ok_or_else(|| Error::ConfigValidation {
                            field: format!("catalog.{}", entry.name),
                            message: "delay required for a new catalog entry".into(),
                        })?
                        .to_cost(&format!("catalog.{}.delay", entry.name))?;
                    let power = entry
                        .power
                        .as_ref()
                        .ok_or_else(|| Error::ConfigValidation {
                            field: format!("catalog.{}", entry.name),
                            message: "power required for a new catalog entry".into(),
                        })?
                        .to_cost(&format!("catalog.{}.power", entry.name))?;
                    tables.catalog.push(CompressorSpec {
                        name: entry.name.clone(),
                        inputs,
                        outputs,
                        delay,
                        power,
                    });
                }
            }
        }
    }

    if let Some(mux) = &doc.mux {
        if let Some(d) = &mux.delay {
            tables.mux_delay = d.to_cost("mux.delay")?;
        }
        if let Some(p) = &mux.power_per_bit {
            tables.mux_power_per_bit = p.to_cost("mux.power_per_bit")?;
        }
    }

    if let Some(cla) = &doc.cla {
        if let Some(v) = &cla.delay_base {
            tables.cla_delay_base = v.to_cost("cla.delay_base")?;
        }
        if let Some(v) = &cla.delay_per_level {
            tables.cla_delay_per_level = v.to_cost("cla.delay_per_level")?;
        }
        if let Some(v) = &cla.power_per_bit {
            tables.cla_power_per_bit = v.to_cost("cla.power_per_bit")?;
        }
    }

    tables.validate()?;
    Ok(tables)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_cost_literals() {
        assert_eq!(parse_cost("4"), Some(Cost::from_integer(4)));
        assert_eq!(parse_cost("4.0"), Some(Cost::from_integer(4)));
        assert_eq!(parse_cost("0.5"), Some(Ratio::new(1, 2)));
        assert_eq!(parse_cost("0.02"), Some(Ratio::new(1, 50)));
        assert_eq!(parse_cost("-1.25"), Some(Ratio::new(-5, 4)));
        assert_eq!(parse_cost("3/7"), Some(Ratio::new(3, 7)));
        assert_eq!(parse_cost("1e-2"), Some(Ratio::new(1, 100)));
        assert_eq!(parse_cost("2.5e2"), Some(Cost::from_integer(250)));
        assert_eq!(parse_cost("abc"), None);
        assert_eq!(parse_cost("1/0"), None);
    }

    #[test]
    fn lut_size_formula() {
        assert_eq!(lut_size_bits(8, 16).unwrap(), 4864);
        assert_eq!(lut_size_bits(1, 16).unwrap(), 32);
        assert_eq!(lut_size_bits(4, 8).unwrap(), 160);
        assert!(lut_size_bits(0, 16).is_err());
        assert!(lut_size_bits(4, 0).is_err());
    }

    #[test]
    fn lut_size_strictly_increasing() {
        for c in 4..=24 {
            for k in 1..16 {
                assert!(lut_size_bits(k + 1, c).unwrap() > lut_size_bits(k, c).unwrap());
            }
        }
        for k in 1..=16 {
            for c in 4..24 {
                assert!(lut_size_bits(k, c + 1).unwrap() > lut_size_bits(k, c).unwrap());
            }
        }
    }

    #[test]
    fn default_tables_validate() {
        let tables = CostTables::default();
        tables.validate().unwrap();
        assert_eq!(tables.lut.max_addr_bits(), DEFAULT_MAX_ADDR_BITS);
        assert_eq!(tables.lut.delay(1).unwrap(), Cost::from_integer(4));
        assert_eq!(tables.lut.delay(8).unwrap(), Cost::from_integer(8));
        assert!(tables.full_adder().is_some());
    }

    #[test]
    fn mux_layer_cases() {
        let tables = CostTables::default();
        assert_eq!(mux_layer_cost(&tables, 0), CostPoint::zero());
        let five = mux_layer_cost(&tables, 5);
        assert_eq!(five.delay, tables.mux_delay);
        assert_eq!(five.power, Cost::from_integer(80) * tables.mux_power_per_bit);
        let unit = CostTables::with_widths(1, 3);
        let one = mux_layer_cost(&unit, 1);
        assert_eq!(one.delay, unit.mux_delay);
        assert_eq!(one.power, unit.mux_power_per_bit);
    }

    #[test]
    fn cla_cases() {
        let tables = CostTables::default();
        let w1 = cla_cost(&tables, 1).unwrap();
        assert_eq!(w1.delay, tables.cla_delay_base);
        assert_eq!(w1.power, tables.cla_power_per_bit);
        let w32 = cla_cost(&tables, 32).unwrap();
        assert_eq!(w32.delay, tables.cla_delay_base + tables.cla_delay_per_level * Cost::from_integer(5));
        let w33 = cla_cost(&tables, 33).unwrap();
        assert_eq!(w33.delay, tables.cla_delay_base + tables.cla_delay_per_level * Cost::from_integer(6));
        assert!(cla_cost(&tables, 0).is_err());
    }

    #[test]
    fn empty_config_is_default() {
        let tables = load_cost_config("").unwrap();
        assert_eq!(tables, CostTables::default());
        let tables = load_cost_config("{}").unwrap();
        assert_eq!(tables, CostTables::default());
    }

    #[test]
    fn single_catalog_override() {
        let tables = load_cost_config(r#"{"catalog": [{"name": "3:2", "delay": 4.5}]}"#).unwrap();
        let fa = tables.full_adder().unwrap();
        assert_eq!(fa.delay, Ratio::new(9, 2));
        assert_eq!(fa.power, Cost::from_integer(2));
        let defaults = CostTables::default();
        assert_eq!(tables.catalog.len(), defaults.catalog.len());
        assert_eq!(tables.catalog[1], defaults.catalog[1]);
    }

    #[test]
    fn invalid_compressor_rejected() {
        let err = load_cost_config(
            r#"{"catalog": [{"name": "2:3", "inputs": 2, "outputs": 3, "delay": 1, "power": 1}]}"#,
        )
        .unwrap_err();
        match err {
            Error::ConfigValidation { field, message } => {
                assert_eq!(field, "catalog.2:3");
                assert!(message.contains("outputs must be < inputs"));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn unknown_keys_rejected() {
        assert!(matches!(
            load_cost_config(r#"{"mystery": 1}"#),
            Err(Error::ConfigSyntax(_))
        ));
        assert!(matches!(
            load_cost_config(r#"{"mux": {"delays": 1}}"#),
            Err(Error::ConfigSyntax(_))
        ));
    }

    #[test]
    fn non_monotone_lut_rejected() {
        let err = load_cost_config(
            r#"{"lut": {"delay": [2, 1], "power": [1, 2]}}"#,
        )
        .unwrap_err();
        assert!(matches!(err, Error::ConfigValidation { ref field, .. } if field == "lut.delay"));
    }

    #[test]
    fn missing_full_adder_rejected() {
        // Renaming 3:2 away while keeping its shape is fine...
        load_cost_config(r#"{"catalog": [{"name": "fa", "inputs": 3, "outputs": 2, "delay": 4, "power": 2}]}"#)
            .unwrap();
        // ...but changing the 3:2 shape so no full adder remains is not.
        let err = load_cost_config(r#"{"catalog": [{"name": "3:2", "inputs": 5}]}"#).unwrap_err();
        assert!(matches!(err, Error::ConfigValidation { ref field, .. } if field == "catalog"));
    }

    #[test]
    fn exact_fraction_strings() {
        let tables =
            load_cost_config(r#"{"mux": {"power_per_bit": "1/3"}}"#).unwrap();
        assert_eq!(tables.mux_power_per_bit, Ratio::new(1, 3));
    }

    #[test]
    fn costpoint_pdp_and_dominance() {
        let a = CostPoint::new(Cost::from_integer(2), Cost::from_integer(3));
        let b = CostPoint::new(Cost::from_integer(2), Cost::from_integer(4));
        let c = CostPoint::new(Cost::from_integer(1), Cost::from_integer(5));
        assert_eq!(a.pdp(), Cost::from_integer(6));
        assert!(a.dominates(&b));
        assert!(!b.dominates(&a));
        assert!(!a.dominates(&c));
        assert!(!c.dominates(&a));
        assert!(!a.dominates(&a));
    }
}
