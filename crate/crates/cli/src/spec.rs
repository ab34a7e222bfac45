//! `G_SPEC` parsing: `path:N | cycle:N | complete:N | kbip:M,N | star:N | match:M,S | file:PATH`.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};
use tokengraphs::{Family, Graph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphSpec {
    Family { kind: String, params: Vec<usize> },
    File(PathBuf),
}

impl FromStr for GraphSpec {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, rest) = s
            .split_once(':')
            .ok_or_else(|| anyhow!("graph spec `{s}` is not of the form KIND:PARAMS"))?;
        if kind == "file" {
            if rest.is_empty() {
                bail!("file spec needs a path");
            }
            return Ok(GraphSpec::File(PathBuf::from(rest)));
        }
        let params = rest
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .with_context(|| format!("bad parameter `{p}` in `{s}`"))
            })
            .collect::<Result<Vec<_>>>()?;
        // reject bad kinds and parameters at parse time
        Family::from_kind(kind, &params)?.build()?;
        Ok(GraphSpec::Family {
            kind: kind.to_string(),
            params,
        })
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSpec::Family { kind, params } => {
                let p: Vec<String> = params.iter().map(|v| v.to_string()).collect();
                write!(f, "{kind}:{}", p.join(","))
            }
            GraphSpec::File(path) => write!(f, "file:{}", path.display()),
        }
    }
}

impl GraphSpec {
    pub fn build(&self) -> Result<Graph> {
        match self {
            GraphSpec::Family { kind, params } => Ok(tokengraphs::family(kind, params)?),
            GraphSpec::File(path) => {
                let text = std::fs::read_to_string(path)
                    .with_context(|| format!("reading {}", path.display()))?;
                Graph::from_edge_list(&text).with_context(|| format!("parsing {}", path.display()))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_every_kind() {
        for (text, order, size) in [
            ("path:4", 4, 3),
            ("cycle:5", 5, 5),
            ("complete:4", 4, 6),
            ("kbip:2,5", 7, 10),
            ("star:5", 6, 5),
            ("match:2,1", 5, 2),
        ] {
            let g = text.parse::<GraphSpec>().unwrap().build().unwrap();
            assert_eq!((g.order(), g.size()), (order, size), "{text}");
        }
    }

    #[test]
    fn round_trips_display() {
        let spec: GraphSpec = "kbip:3,4".parse().unwrap();
        assert_eq!(spec.to_string(), "kbip:3,4");
    }

    #[test]
    fn rejects_bad_specs() {
        for bad in [
            "cycle",
            "cycle:x",
            "wheel:5",
            "kbip:3",
            "match:2,2",
            "file:",
        ] {
            assert!(bad.parse::<GraphSpec>().is_err(), "{bad}");
        }
    }
}
