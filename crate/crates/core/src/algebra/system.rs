use std::collections::HashSet;
use std::sync::{Arc, LazyLock};

use crate::error::{Error, Result};

/// Named list of weighted polynomial generators.
///
/// Weights are stored positive: the Lazard generator `u_i` sits in
/// cohomological degree `-i` and is recorded here with weight `i`. The same
/// flip applies to β. Every homogeneity statement in this crate is phrased
/// in these positive weights.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneratorSystem {
    name: String,
    generators: Vec<(String, u32)>,
}

static LAZARD: LazyLock<Arc<GeneratorSystem>> = LazyLock::new(|| {
    Arc::new(GeneratorSystem::new("lazard", (1..=5).map(|i| (format!("u{i}"), i)).collect()).expect("built-in system"))
});

static KBETA: LazyLock<Arc<GeneratorSystem>> =
    LazyLock::new(|| Arc::new(GeneratorSystem::new("kbeta", vec![("beta".into(), 1)]).expect("built-in system")));

static PROJECTIVE: LazyLock<Arc<GeneratorSystem>> = LazyLock::new(|| {
    Arc::new(
        GeneratorSystem::new("projective", (1..=5).map(|i| (format!("p{i}"), i)).collect()).expect("built-in system"),
    )
});

static EMPTY: LazyLock<Arc<GeneratorSystem>> =
    LazyLock::new(|| Arc::new(GeneratorSystem::new("empty", vec![]).expect("built-in system")));

impl GeneratorSystem {
    pub fn new(name: impl Into<String>, generators: Vec<(String, u32)>) -> Result<Self> {
        let mut seen = HashSet::new();
        for (sym, w) in &generators {
            if *w == 0 {
                return Err(Error::InvalidInput(format!("generator {sym} has weight 0")));
            }
            if sym.is_empty() || !sym.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                return Err(Error::InvalidInput(format!("bad generator symbol {sym:?}")));
            }
            if !seen.insert(sym.as_str()) {
                return Err(Error::InvalidInput(format!("duplicate generator {sym}")));
            }
        }
        Ok(GeneratorSystem { name: name.into(), generators })
    }

    /// `u1..u5`, weight of `u_i` is `i`.
    pub fn lazard() -> Arc<Self> {
        LAZARD.clone()
    }

    /// `beta`, weight 1.
    pub fn kbeta() -> Arc<Self> {
        KBETA.clone()
    }

    /// `p1..p5` standing for `[P^1]..[P^5]`; a rational basis of the Lazard ring.
    pub fn projective() -> Arc<Self> {
        PROJECTIVE.clone()
    }

    /// No generators: the ring is ℤ (or ℚ).
    pub fn empty() -> Arc<Self> {
        EMPTY.clone()
    }

    pub fn builtin(name: &str) -> Option<Arc<Self>> {
        match name {
            "lazard" => Some(Self::lazard()),
            "kbeta" => Some(Self::kbeta()),
            "projective" => Some(Self::projective()),
            "empty" => Some(Self::empty()),
            _ => None,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn symbols(&self) -> impl Iterator<Item = &str> + Clone {
        self.generators.iter().map(|(s, _)| s.as_str())
    }

    pub fn weights(&self) -> Vec<u32> {
        self.generators.iter().map(|(_, w)| *w).collect()
    }

    pub fn weight(&self, index: usize) -> u32 {
        self.generators[index].1
    }

    pub fn index_of(&self, symbol: &str) -> Option<usize> {
        self.generators.iter().position(|(s, _)| s == symbol)
    }

    pub fn max_weight(&self) -> u32 {
        self.generators.iter().map(|(_, w)| *w).max().unwrap_or(0)
    }
}

pub(crate) fn same_system(a: &Arc<GeneratorSystem>, b: &Arc<GeneratorSystem>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins() {
        let l = GeneratorSystem::lazard();
        assert_eq!(l.len(), 5);
        assert_eq!(l.weights(), vec![1, 2, 3, 4, 5]);
        assert_eq!(l.index_of("u3"), Some(2));
        assert_eq!(GeneratorSystem::kbeta().weights(), vec![1]);
        assert!(GeneratorSystem::empty().is_empty());
    }

    #[test]
    fn rejects_bad_generators() {
        assert!(GeneratorSystem::new("x", vec![("a".into(), 1), ("a".into(), 2)]).is_err());
        assert!(GeneratorSystem::new("x", vec![("a".into(), 0)]).is_err());
    }
}
