use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::catalog::{SolutionKind, SolutionSpec};
use crate::minkowski::{MetricConvention, Signature};
use crate::noether::{Mutation, ZilchForm};
use crate::numeric::GridSpec;

use super::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Task {
    VerifyIdentities,
    EvalZilch,
    Decompose,
    Divergence,
    Convergence,
}

impl Task {
    pub const ALL: [Task; 5] = [Task::VerifyIdentities, Task::EvalZilch, Task::Decompose, Task::Divergence, Task::Convergence];

    pub fn name(self) -> &'static str {
        match self {
            Task::VerifyIdentities => "verify-identities",
            Task::EvalZilch => "eval-zilch",
            Task::Decompose => "decompose",
            Task::Divergence => "divergence",
            Task::Convergence => "convergence",
        }
    }
}

impl std::str::FromStr for Task {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Task::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| format!("unknown task `{s}` (expected one of: {})", Task::ALL.map(Task::name).join(", ")))
    }
}

/// A run configuration as read from TOML. Every key is optional.
///
/// | key | default |
/// |---|---|
/// | `signatures` | `["+---"]` |
/// | `epsilon0123` | `1` |
/// | `tasks` | `["verify-identities"]` |
/// | `out` | `"zilch-out"` |
/// | `seed` | `2024` |
/// | `events` | `200` |
/// | `forms` | all eight |
/// | `csv-forms` | `["kibble-1"]` |
/// | `mutate` | none |
/// | `grid` | 16 points per wavelength, 4th order, 4 levels |
/// | `solutions` | a circular wave and a crossed pair |
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
pub struct RunConfig {
    #[serde(default = "d_signatures")]
    pub signatures: Vec<Signature>,
    #[serde(default = "d_epsilon")]
    pub epsilon0123: i8,
    #[serde(default = "d_tasks")]
    pub tasks: Vec<Task>,
    #[serde(default = "d_out")]
    pub out: PathBuf,
    #[serde(default = "d_seed")]
    pub seed: u64,
    /// random events per solution
    #[serde(default = "d_events")]
    pub events: usize,
    #[serde(default = "d_forms")]
    pub forms: Vec<ZilchForm>,
    /// forms written out component by component in `eval-zilch`
    #[serde(default = "d_csv_forms")]
    pub csv_forms: Vec<ZilchForm>,
    /// debug only: run the identity suite with a deliberately wrong coefficient
    #[serde(default)]
    pub mutate: Option<Mutation>,
    /// grid for `convergence`; `null` uses the default for each solution's frequency
    #[serde(default)]
    pub grid: Option<GridSpec>,
    #[serde(default = "d_solutions")]
    pub solutions: Vec<SolutionSpec>,
}

fn d_signatures() -> Vec<Signature> {
    vec![Signature::MostlyMinus]
}
fn d_epsilon() -> i8 {
    1
}
fn d_tasks() -> Vec<Task> {
    vec![Task::VerifyIdentities]
}
fn d_out() -> PathBuf {
    PathBuf::from("zilch-out")
}
fn d_seed() -> u64 {
    2024
}
fn d_events() -> usize {
    200
}
fn d_forms() -> Vec<ZilchForm> {
    ZilchForm::ALL.to_vec()
}
fn d_csv_forms() -> Vec<ZilchForm> {
    vec![ZilchForm::Kibble1]
}

/// A circular wave along `z` and a crossed pair whose currents vary in
/// space, so the grid diagnostic has something to resolve.
pub fn default_solutions() -> Vec<SolutionSpec> {
    let mut circular = SolutionSpec::circular(1);
    circular.name = "circular".into();
    let mut crossed = SolutionSpec::new(SolutionKind::Superposition);
    crossed.name = "crossed".into();
    crossed.components = vec![
        SolutionSpec::circular(1).with_direction([1.0, 2.0, 2.0], [2.0, -2.0, 1.0]),
        SolutionSpec::linear().with_direction([0.0, 1.0, 0.0], [0.0, 0.0, 1.0]).with_amplitude(0.6),
    ];
    vec![circular, crossed]
}

fn d_solutions() -> Vec<SolutionSpec> {
    default_solutions()
}

impl Default for RunConfig {
    fn default() -> Self {
        toml::from_str("").expect("defaults parse")
    }
}

impl RunConfig {
    pub fn from_toml(text: &str) -> Result<Self, CliError> {
        let cfg: RunConfig = toml::from_str(text).map_err(|e| CliError::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
        Self::from_toml(&text).map_err(|e| match e {
            CliError::Config(msg) => CliError::Config(format!("{}: {msg}", path.display())),
            other => other,
        })
    }

    pub fn conventions(&self) -> Result<Vec<MetricConvention>, CliError> {
        self.signatures
            .iter()
            .map(|s| MetricConvention::new(*s, self.epsilon0123 as i64).map_err(|e| CliError::Config(e.to_string())))
            .collect()
    }

    /// Solution names, falling back to `solution-<n>` for unnamed entries.
    pub fn solution_names(&self) -> Vec<String> {
        self.solutions
            .iter()
            .enumerate()
            .map(|(i, s)| if s.name.is_empty() { format!("solution-{i}") } else { s.name.clone() })
            .collect()
    }

    pub fn validate(&self) -> Result<(), CliError> {
        let bad = |msg: String| Err(CliError::Config(msg));
        if self.signatures.is_empty() {
            return bad("`signatures` must name at least one signature".into());
        }
        if self.tasks.is_empty() {
            return bad("`tasks` must name at least one task".into());
        }
        self.conventions()?;
        if self.events == 0 {
            return bad("`events` must be positive".into());
        }
        let names = self.solution_names();
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return bad(format!("duplicate solution name `{n}`"));
            }
            if !n.chars().all(|c| c.is_ascii_alphanumeric() || c == '-' || c == '_') {
                return bad(format!("solution name `{n}` may only use letters, digits, `-` and `_`"));
            }
        }
        let numeric = self.tasks.iter().any(|t| *t != Task::VerifyIdentities);
        if numeric && self.solutions.is_empty() {
            return bad("numeric tasks need at least one entry in `solutions`".into());
        }
        for conv in self.conventions()? {
            for s in &self.solutions {
                s.build(&conv).map_err(|e| CliError::Config(e.to_string()))?;
            }
        }
        Ok(())
    }
}
