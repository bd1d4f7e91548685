//! Group definition files: a JSON document naming a construction (explicit
//! table, cyclic/dihedral/symmetric, or a direct product), optional labels,
//! and optional named subgroups given by members or generators.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, SubgroupRef};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupFile {
    pub group: GroupSpec,
    #[serde(default)]
    pub labels: Option<Vec<String>>,
    #[serde(default)]
    pub subgroups: BTreeMap<String, SubgroupSpec>,
}

#[derive(Debug, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupSpec {
    Cyclic(usize),
    Dihedral(usize),
    Symmetric(usize),
    Table(Vec<Vec<usize>>),
    Product(Vec<GroupSpec>),
}

#[derive(Debug, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SubgroupSpec {
    Members(Vec<String>),
    Generators(Vec<String>),
}

fn build_group(spec: &GroupSpec) -> Result<Arc<FiniteGroup>> {
    match spec {
        GroupSpec::Cyclic(n) => FiniteGroup::cyclic(*n),
        GroupSpec::Dihedral(n) => FiniteGroup::dihedral(*n),
        GroupSpec::Symmetric(n) => FiniteGroup::symmetric(*n),
        GroupSpec::Table(t) => FiniteGroup::build_from_table(t.clone(), None),
        GroupSpec::Product(factors) => {
            if factors.len() < 2 {
                return Err(Error::Parse {
                    location: "group.product".into(),
                    message: "a product needs at least two factors".into(),
                });
            }
            let mut acc = build_group(&factors[0])?;
            for f in &factors[1..] {
                acc = FiniteGroup::direct_product(&acc, &build_group(f)?)?;
            }
            Ok(acc)
        }
    }
}

/// Parse and validate a group file, returning the group and its named subgroups.
pub fn parse_group_file(path: &Path) -> Result<(Arc<FiniteGroup>, BTreeMap<String, SubgroupRef>)> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse {
        location: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse_group_text(&text)
}

pub fn parse_group_text(text: &str) -> Result<(Arc<FiniteGroup>, BTreeMap<String, SubgroupRef>)> {
    let file: GroupFile = serde_json::from_str(text).map_err(|e| Error::Parse {
        location: format!("line {}, column {}", e.line(), e.column()),
        message: e.to_string(),
    })?;
    let mut group = build_group(&file.group)?;
    if let Some(labels) = file.labels {
        if labels.len() != group.order {
            return Err(Error::Parse {
                location: "labels".into(),
                message: format!("expected {} labels, got {}", group.order, labels.len()),
            });
        }
        let mut owned = (*group).clone();
        owned.labels = Some(labels);
        group = Arc::new(owned);
    }
    let mut subgroups = BTreeMap::new();
    for (name, spec) in &file.subgroups {
        let resolve = |labels: &[String]| -> Result<Vec<usize>> {
            labels.iter().map(|l| group.index_of_label(l)).collect()
        };
        let sg = match spec {
            SubgroupSpec::Members(ls) => SubgroupRef::new(Arc::clone(&group), resolve(ls)?)?,
            SubgroupSpec::Generators(ls) => SubgroupRef::closure(Arc::clone(&group), &resolve(ls)?)?,
        };
        subgroups.insert(name.clone(), sg);
    }
    Ok((group, subgroups))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_file() {
        let (g, subs) = parse_group_text(r#"{"group": {"cyclic": 4}}"#).unwrap();
        assert_eq!(g.order, 4);
        assert!(subs.is_empty());
    }

    #[test]
    fn explicit_table_file() {
        let (g, _) = parse_group_text(r#"{"group": {"table": [[0,1],[1,0]]}}"#).unwrap();
        assert_eq!(g.order, 2);
        assert_eq!(g.identity, 0);
    }

    #[test]
    fn product_with_subgroups() {
        let text = r#"{
            "group": {"product": [{"cyclic": 2}, {"dihedral": 3}]},
            "subgroups": {
                "H": {"members": ["(0,e)", "(0,a)", "(0,a2)", "(0,b)", "(0,ab)", "(0,a2b)"]},
                "K": {"generators": ["(0,a)"]}
            }
        }"#;
        let (g, subs) = parse_group_text(text).unwrap();
        assert_eq!(g.order, 12);
        assert_eq!(subs["H"].order(), 6);
        assert_eq!(subs["K"].members, vec![0, 2, 4]);
    }

    #[test]
    fn parse_errors_carry_location() {
        match parse_group_text("{") {
            Err(Error::Parse { location, .. }) => assert!(location.contains("line")),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(parse_group_text(r#"{"group": {"table": [[0,1],[1,2]]}}"#).is_err());
        assert!(parse_group_text(r#"{"group": {"cyclic": 2}, "labels": ["x"]}"#).is_err());
        assert!(matches!(
            parse_group_text(r#"{"group": {"cyclic": 2}, "subgroups": {"H": {"members": ["z"]}}}"#),
            Err(Error::UnknownLabel(_))
        ));
    }
}
