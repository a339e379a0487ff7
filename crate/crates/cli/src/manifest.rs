use betadix::counting::CountMode;
use betadix::padic::HypothesisMode;
use clap::{Args, ValueEnum};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Expand,
    CnsCheck,
    Count,
    BoundReport,
    Interpolate,
    GapCheck,
    Persistence,
    Practical,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
    Text,
}

/// Everything that determines a report. Elements are integer polynomials
/// in `x`, read modulo the ring polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, Args)]
#[serde(default)]
pub struct Params {
    /// Defining polynomial of the ring; `x` gives the integers.
    #[arg(long, env = "BETADIX_RING", default_value = "x")]
    pub ring: String,
    #[arg(long, env = "BETADIX_ALPHA", allow_hyphen_values = true)]
    pub alpha: Option<String>,
    #[arg(long, env = "BETADIX_BETA", allow_hyphen_values = true)]
    pub beta: Option<String>,
    /// Comma-separated digit set [default: 0, 1, ..., |N(beta)| - 1].
    #[arg(long, env = "BETADIX_DIGITS", allow_hyphen_values = true)]
    pub digits: Option<String>,
    /// Element to expand (`expand`), or integer `n` (`persistence`, `practical`).
    #[arg(long, env = "BETADIX_VALUE", allow_hyphen_values = true)]
    pub value: Option<String>,
    /// The omitted digit `b`, given by value.
    #[arg(long, env = "BETADIX_DIGIT", allow_hyphen_values = true)]
    pub digit: Option<String>,
    /// Upper end of the exponent or integer range.
    #[arg(long = "N", env = "BETADIX_N")]
    #[serde(rename = "N")]
    pub n: Option<u64>,
    /// Lower end of the integer range (`persistence`, `practical`).
    #[arg(long, env = "BETADIX_FROM")]
    pub from: Option<u64>,
    /// p-adic precision.
    #[arg(long = "K", env = "BETADIX_PRECISION")]
    #[serde(rename = "K")]
    pub precision: Option<u32>,
    /// Number of digits (`expand`) or prefix length (`gap-check`).
    #[arg(long = "k", env = "BETADIX_PREFIX")]
    pub k: Option<u32>,
    /// Override for the unit order `u`.
    #[arg(long, env = "BETADIX_U")]
    pub u: Option<u64>,
    #[arg(long, env = "BETADIX_L")]
    pub l: Option<u64>,
    /// p-adic argument of the interpolating function.
    #[arg(long, env = "BETADIX_X", allow_hyphen_values = true)]
    pub x: Option<String>,
    /// Base for `persistence`.
    #[arg(long, env = "BETADIX_BASE")]
    pub base: Option<u32>,
    /// `theorem` or `exploration`.
    #[arg(long, env = "BETADIX_HYPOTHESIS", default_value = "theorem")]
    pub hypothesis: HypothesisMode,
    /// `radix-only` or `beta-adic`.
    #[arg(long, env = "BETADIX_COUNT_MODE", default_value = "radix-only")]
    pub count_mode: CountMode,
    #[arg(long, env = "BETADIX_FORMAT", value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Seed for sampled checks.
    #[arg(long, env = "BETADIX_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Number of random exponent pairs for `gap-check` instead of all pairs.
    #[arg(long, env = "BETADIX_SAMPLES")]
    pub samples: Option<usize>,
}

impl Default for Params {
    fn default() -> Self {
        Params {
            ring: "x".into(),
            alpha: None,
            beta: None,
            digits: None,
            value: None,
            digit: None,
            n: None,
            from: None,
            precision: None,
            k: None,
            u: None,
            l: None,
            x: None,
            base: None,
            hypothesis: HypothesisMode::Theorem,
            count_mode: CountMode::RadixOnly,
            format: Format::Json,
            seed: 0,
            samples: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExperimentManifest {
    pub command: Command,
    #[serde(flatten)]
    pub params: Params,
}

impl ExperimentManifest {
    pub fn render(&self) -> String {
        serde_json::to_string_pretty(self).expect("manifest serializes") + "\n"
    }

    pub fn parse(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}
