//! Maps between finite sets, given by their image lists.

use crate::error::{AlgebraError, Result};

/// `f: {0..m} -> {0..n}` with `image[x] = f(x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteMap {
    codomain_size: usize,
    image: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MapKind {
    pub injective: bool,
    pub surjective: bool,
    pub bijective: bool,
}

impl FiniteMap {
    pub fn new(codomain_size: usize, image: Vec<usize>) -> Result<Self> {
        if let Some(&bad) = image.iter().find(|&&y| y >= codomain_size) {
            return Err(AlgebraError::Structure(format!(
                "image {bad} outside a codomain of size {codomain_size}"
            )));
        }
        Ok(Self {
            codomain_size,
            image,
        })
    }

    /// Builds from 1-based images, the way maps are written by hand.
    pub fn from_one_based(codomain_size: usize, image: &[usize]) -> Result<Self> {
        let image = image
            .iter()
            .map(|&y| {
                y.checked_sub(1)
                    .ok_or_else(|| AlgebraError::Structure("images are numbered from 1".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(codomain_size, image)
    }

    pub fn domain_size(&self) -> usize {
        self.image.len()
    }

    pub fn codomain_size(&self) -> usize {
        self.codomain_size
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    /// Parses `codomain: n` and `image: y1 y2 ...` lines (1-based images,
    /// `#` comments).
    pub fn parse(text: &str) -> Result<Self> {
        let mut codomain = None;
        let mut image = None;
        for (no, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = |what: &str| AlgebraError::Parse(format!("line {}: {what}", no + 1));
            let (key, value) = line.split_once(':').ok_or_else(|| bad("expected `key: value`"))?;
            match key.trim() {
                "codomain" => {
                    codomain = Some(value.trim().parse::<usize>().map_err(|_| bad("bad codomain size"))?)
                }
                "image" => {
                    image = Some(
                        value
                            .split_whitespace()
                            .map(|t| t.parse::<usize>().map_err(|_| bad("bad image entry")))
                            .collect::<Result<Vec<_>>>()?,
                    )
                }
                other => return Err(bad(&format!("unknown key `{other}`"))),
            }
        }
        let codomain = codomain.ok_or_else(|| AlgebraError::Parse("missing `codomain:`".into()))?;
        let image = image.ok_or_else(|| AlgebraError::Parse("missing `image:`".into()))?;
        Self::from_one_based(codomain, &image)
    }
}

pub fn classify_map(f: &FiniteMap) -> MapKind {
    let mut hits = vec![0usize; f.codomain_size];
    for &y in &f.image {
        hits[y] += 1;
    }
    let injective = hits.iter().all(|&h| h <= 1);
    let surjective = hits.iter().all(|&h| h >= 1);
    MapKind {
        injective,
        surjective,
        bijective: injective && surjective,
    }
}
