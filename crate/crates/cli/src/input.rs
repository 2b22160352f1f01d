//! Input loading and parsing: presets, manifold description files,
//! comma-separated coefficient lists.

use std::fmt;
use std::path::{Path, PathBuf};

use symsurf::{Error as EngineError, HClass, Manifold4};

#[derive(Debug)]
pub enum CliError {
    Io(PathBuf, std::io::Error),
    Parse(String),
    Engine(EngineError),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Io(path, e) => write!(f, "cannot read {}: {e}", path.display()),
            CliError::Parse(msg) => write!(f, "{msg}"),
            CliError::Engine(e) => write!(f, "{e}"),
        }
    }
}

impl From<EngineError> for CliError {
    fn from(e: EngineError) -> Self {
        CliError::Engine(e)
    }
}

impl CliError {
    /// 2 for input/validation problems, 3 for geometric impossibility
    /// (a branched cover whose signature formula is not integral).
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Engine(EngineError::NonIntegralSignature { .. }) => 3,
            _ => 2,
        }
    }
}

pub fn load_manifold(
    preset: Option<&str>,
    manifold_path: Option<&Path>,
) -> Result<Manifold4, CliError> {
    match (preset, manifold_path) {
        (Some(name), None) => Manifold4::preset(name).ok_or_else(|| {
            CliError::Parse(format!(
                "unknown preset {name:?}, expected one of k3, t4, cp2, s2xs2"
            ))
        }),
        (None, Some(path)) => {
            let text =
                std::fs::read_to_string(path).map_err(|e| CliError::Io(path.to_path_buf(), e))?;
            serde_json::from_str(&text).map_err(|e| {
                CliError::Parse(format!("invalid manifold file {}: {e}", path.display()))
            })
        }
        // clap enforces exactly one source; unreachable in practice.
        _ => Err(CliError::Parse(
            "exactly one of --preset and --manifold is required".into(),
        )),
    }
}

pub fn parse_class(text: &str) -> Result<HClass, CliError> {
    let coeffs = text
        .split(',')
        .map(|part| {
            part.trim()
                .parse::<i64>()
                .map_err(|_| CliError::Parse(format!("invalid class coefficient {part:?}")))
        })
        .collect::<Result<Vec<i64>, CliError>>()?;
    Ok(HClass::new(coeffs))
}

pub fn parse_indices(text: &str) -> Result<Vec<usize>, CliError> {
    text.split(',')
        .map(|part| {
            part.trim()
                .parse::<usize>()
                .map_err(|_| CliError::Parse(format!("invalid basis index {part:?}")))
        })
        .collect()
}
