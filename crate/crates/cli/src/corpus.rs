//! Named example bundles shipped with the tool.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use a2star::scalar::from_int;
use a2star::{BundleSpec, LaurentPoly2, Rat};

use crate::json;

pub struct CorpusEntry {
    pub name: &'static str,
    pub spec: BundleSpec,
    pub notes: &'static str,
}

pub fn entries() -> Vec<CorpusEntry> {
    let one = LaurentPoly2::one();
    let one_plus_xy =
        LaurentPoly2::from_terms([((0, 0), from_int::<Rat>(1)), ((1, 1), from_int(1))]);
    vec![
        CorpusEntry {
            name: "sl2",
            spec: BundleSpec::try_new(1, 1, one.clone()).unwrap(),
            notes: "X(1,1,1): the special linear group of rank one as a bundle over \
                    the punctured plane; cocycle (xy)^-1, de Rham coefficient 1",
        },
        CorpusEntry {
            name: "x21",
            spec: BundleSpec::try_new(2, 1, one.clone()).unwrap(),
            notes: "X(2,1,1): homogeneous of degree -3, de Rham coefficient 0; an \
                    exotic affine 3-sphere",
        },
        CorpusEntry {
            name: "x31",
            spec: BundleSpec::try_new(3, 1, one.clone()).unwrap(),
            notes: "X(3,1,1): homogeneous of degree -4; shares its abstract total \
                    space with x22",
        },
        CorpusEntry {
            name: "x22",
            spec: BundleSpec::try_new(2, 2, one).unwrap(),
            notes: "X(2,2,1): homogeneous of degree -4, cocycle (xy)^-2; carries a \
                    second bundle structure with the x31 cocycle",
        },
        CorpusEntry {
            name: "x_22_deformed",
            spec: BundleSpec::try_new(2, 2, one_plus_xy).unwrap(),
            notes: "X(2,2,1+xy): de Rham coefficient 1; same base and weights as a \
                    deformation of x22 but not isomorphic to it as a variety",
        },
    ]
}

pub fn entry_to_json(entry: &CorpusEntry) -> serde_json::Value {
    serde_json::json!({
        "name": entry.name,
        "spec": json::bundle_to_dto(&entry.spec),
        "notes": entry.notes,
    })
}

/// Write every corpus entry as `<name>.json` under `dir`.
pub fn write_corpus(dir: &Path) -> io::Result<Vec<PathBuf>> {
    fs::create_dir_all(dir)?;
    let mut written = Vec::new();
    for entry in entries() {
        let path = dir.join(format!("{}.json", entry.name));
        fs::write(&path, json::render(&entry_to_json(&entry)))?;
        written.push(path);
    }
    Ok(written)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn entries_are_valid_and_unique() {
        let all = entries();
        assert_eq!(all.len(), 5);
        let mut names: Vec<_> = all.iter().map(|e| e.name).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), 5);
        for e in &all {
            assert!(e.spec.validate().is_ok(), "{} invalid", e.name);
        }
    }
}
