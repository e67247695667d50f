use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A total vertex coloring; `colors[v]` is the color of vertex `v`.
///
/// Serializes as a plain JSON array of color ids indexed by vertex.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Coloring(Vec<u32>);

impl Coloring {
    pub fn new(colors: Vec<u32>) -> Coloring {
        Coloring(colors)
    }

    /// Every vertex gets color 0.
    pub fn constant(n: usize) -> Coloring {
        Coloring(vec![0; n])
    }

    /// Vertex `v` gets color `v`.
    pub fn injective(n: usize) -> Coloring {
        Coloring((0..n as u32).collect())
    }

    pub fn colors(&self) -> &[u32] {
        &self.0
    }

    #[inline]
    pub fn color(&self, v: usize) -> u32 {
        self.0[v]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of distinct colors used.
    pub fn palette_size(&self) -> usize {
        self.0.iter().collect::<BTreeSet<_>>().len()
    }

    /// Largest color id plus one (0 for the empty coloring).
    pub fn color_bound(&self) -> usize {
        self.0.iter().max().map_or(0, |&c| c as usize + 1)
    }

    /// Renames colors to `0, 1, ..` in order of first appearance.
    pub fn normalized(&self) -> Coloring {
        let mut seen: Vec<u32> = Vec::new();
        let colors = self
            .0
            .iter()
            .map(|c| match seen.iter().position(|s| s == c) {
                Some(i) => i as u32,
                None => {
                    seen.push(*c);
                    (seen.len() - 1) as u32
                }
            })
            .collect();
        Coloring(colors)
    }

    /// Applies `rename` to every color.
    pub fn map_colors<F: Fn(u32) -> u32>(&self, rename: F) -> Coloring {
        Coloring(self.0.iter().map(|&c| rename(c)).collect())
    }

    /// Coloring of the subgraph induced by `verts` (new vertex `i` is `verts[i]`).
    pub fn restrict(&self, verts: &[usize]) -> Coloring {
        Coloring(verts.iter().map(|&v| self.0[v]).collect())
    }

    /// Reads a JSON array of ints, or `v:color` lines.
    pub fn parse(text: &str) -> Result<Coloring> {
        let trimmed = text.trim();
        if trimmed.starts_with('[') {
            return serde_json::from_str(trimmed).map_err(|e| Error::Parse(format!("coloring JSON: {e}")));
        }
        let mut pairs = Vec::new();
        for line in trimmed.lines().map(str::trim).filter(|l| !l.is_empty()) {
            let (v, c) = line
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("expected v:color, got {line:?}")))?;
            let v: usize = v.trim().parse().map_err(|_| Error::Parse(format!("bad vertex in {line:?}")))?;
            let c: u32 = c.trim().parse().map_err(|_| Error::Parse(format!("bad color in {line:?}")))?;
            pairs.push((v, c));
        }
        let n = pairs.len();
        let mut colors = vec![None; n];
        for (v, c) in pairs {
            if v >= n {
                return Err(Error::Parse(format!("vertex {v} out of range for {n} lines")));
            }
            if colors[v].replace(c).is_some() {
                return Err(Error::Parse(format!("vertex {v} colored twice")));
            }
        }
        Ok(Coloring(colors.into_iter().map(|c| c.expect("every slot filled")).collect()))
    }

    /// `v:color` lines.
    pub fn to_lines(&self) -> String {
        self.0.iter().enumerate().map(|(v, c)| format!("{v}:{c}\n")).collect()
    }
}

impl From<Vec<u32>> for Coloring {
    fn from(colors: Vec<u32>) -> Self {
        Coloring(colors)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn palette_and_normalization() {
        let c = Coloring::new(vec![5, 3, 5, 9]);
        assert_eq!(c.palette_size(), 3);
        assert_eq!(c.normalized().colors(), &[0, 1, 0, 2]);
        assert_eq!(c.color_bound(), 10);
    }

    #[test]
    fn text_formats() {
        let c = Coloring::parse("[1, 2, 3, 2]").unwrap();
        assert_eq!(c.colors(), &[1, 2, 3, 2]);
        let d = Coloring::parse("1:2\n0:1\n3:2\n2:3\n").unwrap();
        assert_eq!(c, d);
        assert_eq!(Coloring::parse(&c.to_lines()).unwrap(), c);
        assert!(Coloring::parse("0:1\n0:2\n").is_err());
        assert!(Coloring::parse("0:1\n5:2\n").is_err());
        assert!(Coloring::parse("[1, -2]").is_err());
        assert_eq!(serde_json::to_string(&c).unwrap(), "[1,2,3,2]");
    }
}
