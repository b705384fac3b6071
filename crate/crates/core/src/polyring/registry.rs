use std::sync::Arc;

use super::PolyError;

/// An ordered list of distinct variable names, fixed at construction.
///
/// Every [`MultiPoly`](super::MultiPoly) carries an `Arc` to its registry and
/// uses exponent vectors of exactly the registry's length.  Two registries
/// are interchangeable when their name lists are equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarRegistry {
    names: Vec<String>,
}

impl VarRegistry {
    /// Builds a registry from an ordered list of distinct names.
    pub fn new<I, S>(names: I) -> Result<Arc<Self>, PolyError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(PolyError::Malformed(format!("duplicate variable `{n}`")));
            }
        }
        Ok(Arc::new(VarRegistry { names }))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, idx: usize) -> &str {
        &self.names[idx]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn index_of_required(&self, name: &str) -> Result<usize, PolyError> {
        self.index_of(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))
    }
}

/// Name for a singly-indexed generated family member, e.g. `a[3]`.
pub(crate) fn indexed1(prefix: &str, i: usize) -> String {
    format!("{prefix}[{i}]")
}

/// Name for a doubly-indexed generated family member, e.g. `b[1,2]`.
pub(crate) fn indexed2(prefix: &str, i: usize, j: usize) -> String {
    format!("{prefix}[{i},{j}]")
}

/// True when the two registries may be mixed in one operation.
pub(crate) fn compatible(a: &Arc<VarRegistry>, b: &Arc<VarRegistry>) -> bool {
    Arc::ptr_eq(a, b) || a.names == b.names
}
