//! File round trips: canonical JSON for every type, plus the 0/1 matrix
//! text form for set systems.
//!
//! JSON is emitted pretty-printed with a trailing newline and struct fields
//! in declaration order, so identical values always produce identical
//! bytes. The matrix form is `"t n"` on the first line followed by `t`
//! rows of `n` characters; row `i`, column `j` is `'1'` iff point `j` lies
//! in block `i` (user `i` holds key `j`). Readers sniff the content: a
//! leading `{` means JSON, anything else is parsed as a matrix.

use crate::model::{BicliqueCover, Error, GraphCovering, Result, SetSystem, SimpleGraph};
use serde::de::DeserializeOwned;
use serde::Serialize;
use std::path::Path;

/// Canonical JSON bytes for any serializable artifact.
pub fn to_canonical_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

pub fn to_matrix(s: &SetSystem) -> String {
    let mut out = format!("{} {}\n", s.t(), s.n_points);
    for block in &s.blocks {
        let mut row = vec![b'0'; s.n_points];
        for &p in block {
            row[p] = b'1';
        }
        out.push_str(std::str::from_utf8(&row).expect("ascii row"));
        out.push('\n');
    }
    out
}

pub fn from_matrix(text: &str) -> Result<SetSystem> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::format("empty matrix file"))?;
    let mut parts = header.split_whitespace();
    let parse = |tok: Option<&str>, what: &str| -> Result<usize> {
        tok.ok_or_else(|| Error::format(format!("matrix header missing {what}")))?
            .parse::<usize>()
            .map_err(|_| Error::format(format!("matrix header has non-numeric {what}")))
    };
    let t = parse(parts.next(), "block count")?;
    let n = parse(parts.next(), "point count")?;
    if parts.next().is_some() {
        return Err(Error::format("matrix header must be exactly \"t n\""));
    }
    let mut blocks = Vec::with_capacity(t);
    for i in 0..t {
        let line = lines
            .next()
            .ok_or_else(|| Error::format(format!("matrix row {i} missing")))?
            .trim();
        if line.len() != n {
            return Err(Error::format(format!(
                "matrix row {i} has {} characters, expected {n}",
                line.len()
            )));
        }
        let mut block = Vec::new();
        for (j, ch) in line.chars().enumerate() {
            match ch {
                '1' => block.push(j),
                '0' => {}
                other => {
                    return Err(Error::format(format!(
                        "matrix row {i} column {j}: unexpected character {other:?}"
                    )))
                }
            }
        }
        blocks.push(block);
    }
    if lines.next().is_some() {
        return Err(Error::format(format!("matrix has more than {t} rows")));
    }
    SetSystem::new(n, blocks)
}

fn looks_like_json(text: &str) -> bool {
    text.trim_start().starts_with('{')
}

/// Reads a set system from JSON or matrix text, sniffing the format.
pub fn read_set_system(path: &Path) -> Result<SetSystem> {
    let text = std::fs::read_to_string(path)?;
    if looks_like_json(&text) {
        Ok(serde_json::from_str(&text)?)
    } else {
        from_matrix(&text)
    }
}

fn read_json<T: DeserializeOwned>(path: &Path, what: &str) -> Result<T> {
    let text = std::fs::read_to_string(path)?;
    if !looks_like_json(&text) {
        return Err(Error::format(format!(
            "{}: expected a JSON {what}",
            path.display()
        )));
    }
    Ok(serde_json::from_str(&text)?)
}

pub fn read_graph(path: &Path) -> Result<SimpleGraph> {
    read_json(path, "graph {\"n_vertices\", \"edges\"}")
}

pub fn read_covering(path: &Path) -> Result<GraphCovering> {
    read_json(path, "covering {\"graph\", \"sets\", \"w\", \"d\"}")
}

pub fn read_biclique_cover(path: &Path) -> Result<BicliqueCover> {
    read_json(path, "biclique cover {\"host\", \"d\", \"bicliques\"}")
}

/// Serializes a set system for a given destination: matrix text when the
/// path ends in `.txt`, canonical JSON otherwise (and always JSON for
/// stdout, signaled by `None`).
pub fn render_set_system(s: &SetSystem, dest: Option<&Path>) -> Result<String> {
    let matrix = dest
        .and_then(|p| p.extension())
        .is_some_and(|ext| ext.eq_ignore_ascii_case("txt"));
    if matrix {
        Ok(to_matrix(s))
    } else {
        to_canonical_json(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{Biclique, HostGraphSpec, HostVertex, Multiplicity};

    #[test]
    fn matrix_roundtrip() {
        let s = SetSystem::new(4, vec![vec![0, 1, 3], vec![], vec![2]]).unwrap();
        let text = to_matrix(&s);
        assert_eq!(text, "3 4\n1101\n0000\n0010\n");
        assert_eq!(from_matrix(&text).unwrap(), s);
    }

    #[test]
    fn matrix_rejects_malformed() {
        assert!(from_matrix("").is_err());
        assert!(from_matrix("1 2\n101\n").is_err());
        assert!(from_matrix("1 3\n1x1\n").is_err());
        assert!(from_matrix("2 2\n11\n").is_err());
        assert!(from_matrix("1 2\n11\n00\n").is_err());
        assert!(from_matrix("a 2\n11\n").is_err());
    }

    #[test]
    fn json_reserialize_is_byte_identical() {
        let s = SetSystem::new(3, vec![vec![0, 2], vec![1]]).unwrap();
        let one = to_canonical_json(&s).unwrap();
        let back: SetSystem = serde_json::from_str(&one).unwrap();
        let two = to_canonical_json(&back).unwrap();
        assert_eq!(one, two);
        assert!(one.ends_with('\n'));
    }

    #[test]
    fn sniffing_readers() {
        let dir = tempfile::tempdir().unwrap();
        let s = SetSystem::new(2, vec![vec![0], vec![1]]).unwrap();
        let jpath = dir.path().join("s.json");
        std::fs::write(&jpath, to_canonical_json(&s).unwrap()).unwrap();
        assert_eq!(read_set_system(&jpath).unwrap(), s);
        let mpath = dir.path().join("s.txt");
        std::fs::write(&mpath, to_matrix(&s)).unwrap();
        assert_eq!(read_set_system(&mpath).unwrap(), s);
        assert_eq!(
            render_set_system(&s, Some(&mpath)).unwrap(),
            to_matrix(&s)
        );
        assert_eq!(
            render_set_system(&s, Some(&jpath)).unwrap(),
            to_canonical_json(&s).unwrap()
        );
        assert_eq!(render_set_system(&s, None).unwrap(), to_canonical_json(&s).unwrap());
    }

    #[test]
    fn covering_and_cover_roundtrip() {
        let g = SimpleGraph::path(3).unwrap();
        let c = GraphCovering::new(g, vec![vec![0, 1], vec![1, 2]], 1, 1).unwrap();
        let js = to_canonical_json(&c).unwrap();
        let back: GraphCovering = serde_json::from_str(&js).unwrap();
        assert_eq!(back, c);

        let bc = BicliqueCover::new(
            HostGraphSpec::Kneser { t: 4, k: 1 },
            Multiplicity::Finite(2),
            vec![Biclique {
                left: vec![HostVertex::Subset(vec![0])],
                right: vec![HostVertex::Subset(vec![1])],
            }],
        )
        .unwrap();
        let js = to_canonical_json(&bc).unwrap();
        let back: BicliqueCover = serde_json::from_str(&js).unwrap();
        assert_eq!(back, bc);
    }
}
