//! Hierarchy sourcing shared by the subcommands: load from a file, or
//! generate inline from twist/degree/seed parameters. Parameters may also
//! come from a key-value config file; explicit flags override it.

use std::collections::HashMap;
use std::fs::File;
use std::io::BufReader;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::Args;

use baxterq::qhierarchy::{Convention, GenConfig, QHierarchy};
use baxterq::scalar;
use baxterq::twist::TwistData;

#[derive(Args, Clone, Default)]
pub struct SourceArgs {
    /// Hierarchy file to load instead of generating.
    #[arg(short, long)]
    input: Option<PathBuf>,
    /// Key-value config file; flags override its entries.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long = "M")]
    m_bos: Option<usize>,
    #[arg(long = "N")]
    n_fer: Option<usize>,
    /// Shift base t = q^{1/2} as an exact rational.
    #[arg(long)]
    t: Option<String>,
    /// Twist parameters, comma separated, or "auto" for the first primes.
    #[arg(long)]
    z: Option<String>,
    /// Single-index degrees: one value for all, or a comma list.
    #[arg(long)]
    deg: Option<String>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    coeff_bound: Option<u32>,
    #[arg(long)]
    k_max: Option<u32>,
    /// unbarred | barred.
    #[arg(long)]
    convention: Option<String>,
}

impl SourceArgs {
    pub fn for_char(m_bos: usize, n_fer: usize, z: Option<String>, t: String) -> Self {
        SourceArgs {
            m_bos: Some(m_bos),
            n_fer: Some(n_fer),
            z,
            t: Some(t),
            deg: Some("0".into()),
            ..Default::default()
        }
    }

    fn merged(&self) -> Result<SourceArgs> {
        let mut out = self.clone();
        if let Some(path) = &self.config {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading config {}", path.display()))?;
            let mut map: HashMap<String, String> = HashMap::new();
            for line in text.lines() {
                let line = line.trim();
                if line.is_empty() || line.starts_with('#') {
                    continue;
                }
                let (k, v) = match line.split_once('=') {
                    Some((k, v)) => (k, v),
                    None => line
                        .split_once(char::is_whitespace)
                        .with_context(|| format!("bad config line {line:?}"))?,
                };
                map.insert(k.trim().to_string(), v.trim().to_string());
            }
            let get = |k: &str| map.get(k).cloned();
            out.m_bos = out.m_bos.or(get("M").map(|v| v.parse()).transpose()?);
            out.n_fer = out.n_fer.or(get("N").map(|v| v.parse()).transpose()?);
            out.t = out.t.or(get("t"));
            out.z = out.z.or(get("z"));
            out.deg = out.deg.or(get("deg"));
            out.seed = out.seed.or(get("seed").map(|v| v.parse()).transpose()?);
            out.coeff_bound = out
                .coeff_bound
                .or(get("coeff_bound").map(|v| v.parse()).transpose()?);
            out.k_max = out.k_max.or(get("k_max").map(|v| v.parse()).transpose()?);
            out.convention = out.convention.or(get("convention"));
        }
        Ok(out)
    }

    fn twist(&self) -> Result<TwistData> {
        let m = self.m_bos.context("missing M (flag or config)")?;
        let n = self.n_fer.context("missing N (flag or config)")?;
        let t = match &self.t {
            Some(s) => scalar::parse_scalar(s).map_err(|e| anyhow::anyhow!(e.to_string()))?,
            None => scalar::int(2),
        };
        match self.z.as_deref() {
            None | Some("auto") => {
                let auto = TwistData::auto(m, n);
                TwistData::new(m, n, t, auto.z_all().to_vec())
                    .map_err(|e| anyhow::anyhow!(e.to_string()))
            }
            Some(list) => {
                let z = list
                    .split(',')
                    .map(|p| scalar::parse_scalar(p.trim()))
                    .collect::<baxterq::Result<Vec<_>>>()
                    .map_err(|e| anyhow::anyhow!(e.to_string()))?;
                TwistData::new(m, n, t, z).map_err(|e| anyhow::anyhow!(e.to_string()))
            }
        }
    }

    fn gen_config(&self, size: usize) -> Result<GenConfig> {
        let degrees: Vec<u32> = match self.deg.as_deref() {
            None => vec![1; size],
            Some(s) => {
                let parts: Vec<u32> = s
                    .split(',')
                    .map(|p| p.trim().parse::<u32>().context("bad degree"))
                    .collect::<Result<_>>()?;
                match parts.len() {
                    1 => vec![parts[0]; size],
                    k if k == size => parts,
                    k => bail!("expected 1 or {size} degrees, got {k}"),
                }
            }
        };
        Ok(GenConfig {
            seed: self.seed.unwrap_or(0),
            degrees,
            coeff_bound: self.coeff_bound.unwrap_or(9),
            k_max: self.k_max.unwrap_or(64),
        })
    }

    fn convention(&self) -> Result<Convention> {
        match self.convention.as_deref() {
            None => Ok(Convention::Unbarred),
            Some(s) => Convention::parse(s).map_err(|e| anyhow::anyhow!(e.to_string())),
        }
    }

    /// One hierarchy: loaded from the input file when given, generated
    /// otherwise.
    pub fn build_single(&self) -> Result<QHierarchy> {
        let merged = self.merged()?;
        if let Some(path) = &merged.input {
            let file = File::open(path).with_context(|| format!("opening {}", path.display()))?;
            return QHierarchy::load(BufReader::new(file))
                .map_err(|e| anyhow::anyhow!(e.to_string()));
        }
        let twist = merged.twist()?;
        let cfg = merged.gen_config(twist.size())?;
        QHierarchy::build(twist, merged.convention()?, &cfg)
            .map_err(|e| anyhow::anyhow!(e.to_string()))
    }

    /// Both conventions over the same twist data and seed. When loading
    /// from a file, the partner convention is regenerated from the stored
    /// header.
    pub fn build_pair(&self) -> Result<(QHierarchy, QHierarchy)> {
        let first = self.build_single()?;
        let cfg = GenConfig {
            seed: first.seed(),
            degrees: first.degrees().to_vec(),
            coeff_bound: self.coeff_bound.unwrap_or(9),
            k_max: self.k_max.unwrap_or(64),
        };
        let partner_conv = match first.convention() {
            Convention::Unbarred => Convention::Barred,
            Convention::Barred => Convention::Unbarred,
        };
        let partner = QHierarchy::build(first.twist().clone(), partner_conv, &cfg)
            .map_err(|e| anyhow::anyhow!(e.to_string()))?;
        Ok(match first.convention() {
            Convention::Unbarred => (first, partner),
            Convention::Barred => (partner, first),
        })
    }
}
