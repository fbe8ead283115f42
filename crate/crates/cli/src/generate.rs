//! Parameter handling and artifacts for `gen` / `verify`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use pstream::oracles::domset_min;
use pstream::reductions::{
    gen_index_2sat, gen_index_domset3, gen_index_girth3, gen_perm_5path, gen_perm_fvs0,
    gen_perm_treewidth1, sample_domset_est, Generated, IndexInstance, PermInstance, ReductionTag,
};
use pstream::{Error, Result};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `key=value` pairs from `--params`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Params(BTreeMap<String, String>);

impl Params {
    pub fn parse<S: AsRef<str>>(items: &[S]) -> Result<Self> {
        let mut map = BTreeMap::new();
        for item in items {
            let item = item.as_ref().trim();
            if item.is_empty() {
                continue;
            }
            let (k, v) = item
                .split_once('=')
                .ok_or_else(|| Error::InvalidParameter(format!("expected key=value, got `{item}`")))?;
            map.insert(k.trim().to_string(), v.trim().to_string());
        }
        Ok(Self(map))
    }

    fn number<T: FromStr>(&self, key: &str) -> Result<Option<T>> {
        self.0
            .get(key)
            .map(|v| {
                v.parse()
                    .map_err(|_| Error::InvalidParameter(format!("{key}={v} is not a number")))
            })
            .transpose()
    }

    fn check_known(&self, tag: ReductionTag, known: &[&str]) -> Result<()> {
        match self.0.keys().find(|k| !known.contains(&k.as_str())) {
            Some(k) => Err(Error::InvalidParameter(format!(
                "{tag} takes {known:?}, not `{k}`"
            ))),
            None => Ok(()),
        }
    }
}

/// Ground truth recorded next to a generated instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Truth {
    Bit(bool),
    Opt(usize),
}

impl fmt::Display for Truth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Truth::Bit(b) => write!(f, "bit={}", u8::from(*b)),
            Truth::Opt(v) => write!(f, "opt={v}"),
        }
    }
}

impl Truth {
    /// Reads the `truth ...` line of a sidecar.
    pub fn from_sidecar(text: &str) -> Result<Self> {
        let line = text
            .lines()
            .map(str::trim)
            .find_map(|l| l.strip_prefix("truth "))
            .ok_or_else(|| Error::Parse {
                line: 0,
                reason: "no `truth` line".into(),
            })?;
        let bad = || Error::Parse {
            line: 0,
            reason: format!("bad truth value `{line}`"),
        };
        match line.trim().split_once('=') {
            Some(("bit", "0")) => Ok(Truth::Bit(false)),
            Some(("bit", "1")) => Ok(Truth::Bit(true)),
            Some(("opt", v)) => v.parse().map(Truth::Opt).map_err(|_| bad()),
            _ => Err(bad()),
        }
    }
}

/// A generated instance ready to be written out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Artifact {
    pub instance: Generated,
    pub truth: Truth,
    /// Every parameter that determined the instance, resolved.
    pub resolved: Vec<(String, String)>,
}

impl Artifact {
    pub fn body(&self) -> String {
        match &self.instance {
            Generated::Graph(s) => s.to_text(),
            Generated::Cnf(c) => c.to_dimacs(),
        }
    }

    pub fn sidecar(&self, tag: ReductionTag, seed: u64) -> String {
        let params: Vec<String> = self.resolved.iter().map(|(k, v)| format!("{k}={v}")).collect();
        format!(
            "truth {}\nreduction={tag}\nseed={seed}\nparams={}\n",
            self.truth,
            params.join(",")
        )
    }
}

fn parse_list<T: FromStr>(key: &str, raw: &str) -> Result<Vec<T>> {
    raw.split(':')
        .map(|t| {
            t.parse()
                .map_err(|_| Error::InvalidParameter(format!("{key}: bad entry `{t}`")))
        })
        .collect()
}

fn join_list<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(":")
}

fn perm_instance(params: &Params, rng: &mut ChaCha8Rng) -> Result<PermInstance> {
    let delta: Vec<u32> = match params.0.get("delta") {
        Some(raw) => parse_list("delta", raw)?,
        None => {
            let n: usize = params.number("n")?.unwrap_or(4);
            let mut d: Vec<u32> = (0..n as u32).collect();
            d.shuffle(rng);
            d
        }
    };
    if let Some(n) = params.number::<usize>("n")? {
        if n != delta.len() {
            return Err(Error::InvalidParameter(format!(
                "n={n} disagrees with delta of length {}",
                delta.len()
            )));
        }
    }
    let len = delta.len();
    let width = if len.is_power_of_two() { len.trailing_zeros() as usize } else { 0 };
    let index = match params.number("index")? {
        Some(i) => i,
        None if len * width > 0 => rng.gen_range(0..len * width),
        None => 0,
    };
    PermInstance::new(delta, index)
}

fn index_instance(params: &Params, rng: &mut ChaCha8Rng) -> Result<IndexInstance> {
    let bits: Vec<bool> = match params.0.get("bits") {
        Some(raw) => raw
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::InvalidParameter(format!("bits: `{c}` is not 0 or 1"))),
            })
            .collect::<Result<_>>()?,
        None => {
            let n: usize = params.number("n")?.unwrap_or(4);
            (0..n).map(|_| rng.gen()).collect()
        }
    };
    if let Some(n) = params.number::<usize>("n")? {
        if n != bits.len() {
            return Err(Error::InvalidParameter(format!(
                "n={n} disagrees with {} bits",
                bits.len()
            )));
        }
    }
    let index = match params.number("index")? {
        Some(i) => i,
        None if !bits.is_empty() => rng.gen_range(0..bits.len()),
        None => 0,
    };
    IndexInstance::new(bits, index)
}

/// Builds the instance for `tag`. Missing parameters are drawn from `seed`.
///
/// Perm reductions take `n`, `delta` (colon-separated), `index`. Index
/// reductions take `n`, `bits` (a 0/1 string), `index`. `domset-est` takes
/// `n`, `beta`, `theta`.
pub fn generate(tag: ReductionTag, params: &Params, seed: u64) -> Result<Artifact> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let s = |x: &dyn ToString| x.to_string();
    match tag {
        ReductionTag::Perm5Path | ReductionTag::PermTreewidth1 | ReductionTag::PermFvs0 => {
            params.check_known(tag, &["n", "delta", "index"])?;
            let p = perm_instance(params, &mut rng)?;
            let g = match tag {
                ReductionTag::Perm5Path => gen_perm_5path(&p)?,
                ReductionTag::PermTreewidth1 => gen_perm_treewidth1(&p)?,
                _ => gen_perm_fvs0(&p)?,
            };
            Ok(Artifact {
                instance: g.instance,
                truth: Truth::Bit(g.truth),
                resolved: vec![
                    ("n".into(), s(&p.size())),
                    ("delta".into(), join_list(p.delta())),
                    ("index".into(), s(&p.bit_index())),
                ],
            })
        }
        ReductionTag::IndexDomset3 | ReductionTag::IndexGirth3 | ReductionTag::Index2Sat => {
            params.check_known(tag, &["n", "bits", "index"])?;
            let x = index_instance(params, &mut rng)?;
            let g = match tag {
                ReductionTag::IndexDomset3 => gen_index_domset3(&x)?,
                ReductionTag::IndexGirth3 => gen_index_girth3(&x)?,
                _ => gen_index_2sat(&x)?,
            };
            let bits: String = x.bits().iter().map(|&b| if b { '1' } else { '0' }).collect();
            Ok(Artifact {
                instance: g.instance,
                truth: Truth::Bit(g.truth),
                resolved: vec![
                    ("n".into(), s(&x.bits().len())),
                    ("bits".into(), bits),
                    ("index".into(), s(&x.index())),
                ],
            })
        }
        ReductionTag::DomsetEst => {
            params.check_known(tag, &["n", "beta", "theta"])?;
            let n = params.number("n")?.unwrap_or(16);
            let beta = params.number("beta")?.unwrap_or(8);
            let theta: Option<u8> = params.number("theta")?;
            if theta.is_some_and(|t| t > 1) {
                return Err(Error::InvalidParameter("theta must be 0 or 1".into()));
            }
            let sample = sample_domset_est(n, beta, seed, theta)?;
            let (opt, _) = domset_min(&sample.graph())?;
            Ok(Artifact {
                instance: Generated::Graph(sample.stream()),
                truth: Truth::Opt(opt),
                resolved: vec![
                    ("n".into(), s(&n)),
                    ("beta".into(), s(&beta)),
                    ("theta".into(), s(&sample.theta())),
                ],
            })
        }
    }
}
