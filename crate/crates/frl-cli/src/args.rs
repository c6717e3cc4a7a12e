//! Shared flag group describing a catalog function.

use anyhow::{bail, Context, Result};
use clap::Args;
use frl_core::catalog::FunctionDescriptor;

#[derive(Args, Debug, Clone)]
pub struct DescriptorArgs {
    /// Function kind: chirp | powerabs | weierstrass | cantor | expabs | gausspower
    #[arg(long = "fn", value_name = "KIND")]
    pub kind: Option<String>,

    /// Full descriptor as JSON: {"kind":"chirp","params":{"alpha":0.7,"beta":0.5},"L":1.0}
    #[arg(long, value_name = "JSON", conflicts_with = "kind")]
    pub descriptor: Option<String>,

    /// Hölder-type exponent mu in (0,1) (powerabs, weierstrass, gausspower)
    #[arg(long)]
    pub mu: Option<f64>,

    /// Chirp amplitude exponent alpha > 0
    #[arg(long)]
    pub alpha: Option<f64>,

    /// Chirp phase exponent beta > 0
    #[arg(long)]
    pub beta: Option<f64>,

    /// Weierstrass frequency base (integer >= 2)
    #[arg(long, default_value_t = 3)]
    pub base: u32,

    /// Cantor-Lebesgue ternary depth
    #[arg(long, default_value_t = 40)]
    pub depth: u32,

    /// Decay rate a > 0 of exp(-a|t|)
    #[arg(long)]
    pub a: Option<f64>,

    /// Domain half-width L (function lives on [-L, L])
    #[arg(long = "L", default_value_t = 1.0)]
    pub halfwidth: f64,
}

impl DescriptorArgs {
    pub fn resolve(&self) -> Result<FunctionDescriptor> {
        if let Some(json) = &self.descriptor {
            let d: FunctionDescriptor =
                serde_json::from_str(json).context("parsing --descriptor JSON")?;
            d.validate()?;
            return Ok(d);
        }
        let kind = match &self.kind {
            Some(k) => k.as_str(),
            None => bail!("missing --fn <KIND> (or --descriptor JSON)"),
        };
        let l = self.halfwidth;
        let need = |v: Option<f64>, what: &str| -> Result<f64> {
            v.with_context(|| format!("--fn {kind} requires --{what}"))
        };
        let d = match kind {
            "chirp" => FunctionDescriptor::chirp(
                need(self.alpha, "alpha")?,
                need(self.beta, "beta")?,
                l,
            )?,
            "powerabs" => FunctionDescriptor::power_abs(need(self.mu, "mu")?, l)?,
            "weierstrass" => FunctionDescriptor::weierstrass(self.base, need(self.mu, "mu")?, l)?,
            "cantor" | "cantorlebesgue" => FunctionDescriptor::cantor_lebesgue(self.depth, l)?,
            "expabs" => FunctionDescriptor::exp_abs(need(self.a, "a")?, l)?,
            "gausspower" => FunctionDescriptor::gauss_power(need(self.mu, "mu")?, l)?,
            other => bail!("unknown function kind '{other}' (see `frl list`)"),
        };
        Ok(d)
    }
}
