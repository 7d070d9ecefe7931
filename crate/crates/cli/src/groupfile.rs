//! JSON group-action files:
//!
//! ```json
//! { "group_order": 2, "chi": -2,
//!   "classes": [ { "order": 1, "orbit_counts": {}, "multiplicity": 1 },
//!                { "order": 2, "orbit_counts": { "1": 6 }, "multiplicity": 1 } ] }
//! ```

use std::collections::BTreeMap;
use std::path::Path;

use confchar_core::equivariant::{FiniteActionGroup, GroupElementClass};
use serde::Deserialize;

use crate::error::CliError;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupFile {
    group_order: u32,
    chi: i64,
    classes: Vec<ClassEntry>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ClassEntry {
    order: u32,
    #[serde(default)]
    orbit_counts: BTreeMap<String, u32>,
    multiplicity: u32,
}

pub struct GroupData {
    pub group: FiniteActionGroup,
    pub chi: i64,
}

pub fn parse(text: &str) -> Result<GroupData, CliError> {
    let file: GroupFile = serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
    let mut classes = Vec::with_capacity(file.classes.len());
    for (i, entry) in file.classes.into_iter().enumerate() {
        let mut orbit_counts = BTreeMap::new();
        for (key, count) in entry.orbit_counts {
            let k: u32 = key
                .trim()
                .parse()
                .map_err(|_| CliError::Parse(format!("class {i}: orbit length {key:?} is not a non-negative integer")))?;
            if count > 0 {
                orbit_counts.insert(k, count);
            }
        }
        classes.push(GroupElementClass { order: entry.order, orbit_counts, multiplicity: entry.multiplicity });
    }
    Ok(GroupData { group: FiniteActionGroup::new(file.group_order, classes), chi: file.chi })
}

pub fn load(path: &Path) -> Result<GroupData, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
    parse(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_rejects_unknown_fields() {
        let ok = r#"{"group_order":2,"chi":-2,"classes":[
            {"order":1,"orbit_counts":{},"multiplicity":1},
            {"order":2,"orbit_counts":{"1":6},"multiplicity":1}]}"#;
        let data = parse(ok).unwrap();
        assert_eq!(data.group.classes[1].fixed_points(), 6);
        assert_eq!(data.chi, -2);

        let extra = r#"{"group_order":1,"chi":0,"classes":[],"name":"x"}"#;
        assert!(matches!(parse(extra), Err(CliError::Parse(_))));
        let bad_key = r#"{"group_order":1,"chi":0,"classes":[{"order":1,"orbit_counts":{"a":1},"multiplicity":1}]}"#;
        assert!(matches!(parse(bad_key), Err(CliError::Parse(_))));
    }
}
