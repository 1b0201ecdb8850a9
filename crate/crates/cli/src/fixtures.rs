//! Fixture manifest: which appendix polynomials to check and which
//! mismatches are known transcription issues.

use std::path::Path;

use serde::{Deserialize, Serialize};
use zeta7_core::curvefactory::{quartic_specialize, QuarticFamily, QuarticFixture};
use zeta7_core::exactcore::{parse_rational, Rational};

use crate::config::ConfigError;

/// Directory holding a `manifest.json` that replaces the built-in one.
pub const FIXTURES_ENV: &str = "ZETA7_FIXTURES";

const BUILTIN: &str = include_str!("../fixtures/manifest.json");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuarticEntry {
    pub id: String,
    pub family: String,
    #[serde(default)]
    pub param: Option<String>,
    /// Set when a mismatch is a known issue: reported as WARN.
    #[serde(default)]
    pub known_issue: Option<String>,
}

impl QuarticEntry {
    pub fn fixture(&self) -> Result<QuarticFixture, ConfigError> {
        let family: QuarticFamily = self.family.parse().map_err(ConfigError::Fixtures)?;
        let param = match &self.param {
            Some(p) => parse_rational(p)?,
            None => Rational::from_integer(0.into()),
        };
        quartic_specialize(family, &param).map_err(|e| ConfigError::Fixtures(e.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Genus3Entry {
    pub id: String,
    /// Elementary symmetric values of the nodes.
    pub symmetric: [String; 4],
    /// Expected `h`, lowest degree first.
    pub h: Vec<String>,
    pub square_degree: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Manifest {
    pub schema_version: String,
    pub quartic_comparisons: Vec<QuarticEntry>,
    pub smooth_quartics: Vec<QuarticEntry>,
    pub genus3_fixtures: Vec<Genus3Entry>,
}

impl Manifest {
    pub fn builtin() -> Self {
        Self::parse(BUILTIN).expect("built-in manifest is valid")
    }

    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        serde_json::from_str(text).map_err(|e| ConfigError::Fixtures(e.to_string()))
    }

    pub fn from_dir(dir: &Path) -> Result<Self, ConfigError> {
        let path = dir.join("manifest.json");
        let text =
            std::fs::read_to_string(&path).map_err(|e| ConfigError::Fixtures(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    /// The manifest under `$ZETA7_FIXTURES`, or the built-in one.
    pub fn load() -> Result<Self, ConfigError> {
        match std::env::var_os(FIXTURES_ENV) {
            Some(dir) => Self::from_dir(Path::new(&dir)),
            None => Ok(Self::builtin()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_manifest_resolves() {
        let m = Manifest::builtin();
        assert_eq!(m.schema_version, "1");
        for e in m.quartic_comparisons.iter().chain(&m.smooth_quartics) {
            e.fixture().unwrap();
        }
        let flagged: Vec<_> = m
            .quartic_comparisons
            .iter()
            .filter(|e| e.known_issue.is_some())
            .map(|e| e.id.as_str())
            .collect();
        assert_eq!(flagged, ["V(0)"]);
    }

    #[test]
    fn unknown_family_is_reported() {
        let e = QuarticEntry {
            id: "W".into(),
            family: "W".into(),
            param: None,
            known_issue: None,
        };
        assert!(matches!(e.fixture(), Err(ConfigError::Fixtures(_))));
    }
}
