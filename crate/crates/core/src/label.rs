use std::fmt;

use serde::{Deserialize, Serialize};

/// Index label of a component in a finite family.
///
/// Products of families are labelled by tuples, so labels stay unique under
/// `⊗` and `⊕` without string mangling. Serializes untagged: a string, a
/// number, or an array of labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Label {
    Name(String),
    Index(usize),
    Tuple(Vec<Label>),
}

impl Label {
    pub fn name(s: impl Into<String>) -> Self {
        Label::Name(s.into())
    }

    /// The label of the single component of the monoidal unit.
    pub fn unit() -> Self {
        Label::Tuple(Vec::new())
    }

    pub fn pair(a: &Label, b: &Label) -> Self {
        Label::Tuple(vec![a.clone(), b.clone()])
    }
}

impl From<&str> for Label {
    fn from(s: &str) -> Self {
        Label::Name(s.to_string())
    }
}

impl From<String> for Label {
    fn from(s: String) -> Self {
        Label::Name(s)
    }
}

impl From<usize> for Label {
    fn from(n: usize) -> Self {
        Label::Index(n)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Name(s) => write!(f, "{s}"),
            Label::Index(n) => write!(f, "{n}"),
            Label::Tuple(parts) if parts.is_empty() => write!(f, "*"),
            Label::Tuple(parts) => {
                write!(f, "(")?;
                for (k, p) in parts.iter().enumerate() {
                    if k > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{p}")?;
                }
                write!(f, ")")
            }
        }
    }
}

/// `0, 1, …, n-1` as labels.
pub fn index_labels(n: usize) -> Vec<Label> {
    (0..n).map(Label::Index).collect()
}
