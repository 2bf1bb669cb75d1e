use std::fmt;

use serde::{Deserialize, Serialize};

/// A discrete attribute symbol.
///
/// Serialized untagged: `null`, an integer, a string, or an array of
/// integers. Equality is exact.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
#[derive(Default)]
pub enum AttrValue {
    /// Padding for absent nodes and edges.
    #[default]
    Null,
    Int(i64),
    Str(String),
    Tuple(Vec<i64>),
}

impl AttrValue {
    /// The attribute used for unattributed nodes and edges.
    pub const fn unit() -> Self {
        AttrValue::Int(1)
    }

    pub fn is_null(&self) -> bool {
        matches!(self, AttrValue::Null)
    }
}


impl From<i64> for AttrValue {
    fn from(v: i64) -> Self {
        AttrValue::Int(v)
    }
}

impl From<&str> for AttrValue {
    fn from(v: &str) -> Self {
        AttrValue::Str(v.to_owned())
    }
}

impl fmt::Display for AttrValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AttrValue::Null => f.write_str("null"),
            AttrValue::Int(v) => write!(f, "{v}"),
            AttrValue::Str(s) => write!(f, "{s:?}"),
            AttrValue::Tuple(vs) => write!(f, "{vs:?}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_forms() {
        let vals = vec![
            AttrValue::Null,
            AttrValue::Int(3),
            AttrValue::from("x"),
            AttrValue::Tuple(vec![1, 2]),
        ];
        let text = serde_json::to_string(&vals).unwrap();
        assert_eq!(text, r#"[null,3,"x",[1,2]]"#);
        let back: Vec<AttrValue> = serde_json::from_str(&text).unwrap();
        assert_eq!(back, vals);
    }

    #[test]
    fn null_is_distinct() {
        assert_ne!(AttrValue::Null, AttrValue::Int(0));
        assert_ne!(AttrValue::Null, AttrValue::Str(String::new()));
        assert_ne!(AttrValue::Null, AttrValue::Tuple(vec![]));
    }
}
