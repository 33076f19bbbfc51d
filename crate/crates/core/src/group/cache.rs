//! Text dump of a closed group, keyed by a hash of the generators so a
//! stale file is detected rather than trusted.
//!
//! ```text
//! psl13-group-cache v1
//! key <sha256 hex>
//! mode projective
//! size 6
//! order 1092
//! m 0 <36 entries in cyclotomic text form>
//! ...
//! end
//! ```

use std::fs;
use std::path::Path;

use sha2::{Digest, Sha256};

use crate::exact::CyclotomicNumber;

use super::closure::{ClosureMode, MatrixGroup};
use super::matrix::CycloMatrix;
use super::GroupError;

pub const CACHE_HEADER: &str = "psl13-group-cache v1";

/// Hash of the generator matrices and the closure mode.
pub fn cache_key(generators: &[CycloMatrix], mode: ClosureMode) -> String {
    let mut h = Sha256::new();
    h.update(CACHE_HEADER.as_bytes());
    h.update(format!("{mode:?}").as_bytes());
    for g in generators {
        h.update(b"\n");
        h.update(g.to_text().as_bytes());
    }
    hex::encode(h.finalize())
}

pub fn write_group(group: &MatrixGroup) -> String {
    let n = group.generators.first().map_or(0, |g| g.size());
    let mut out = String::new();
    out.push_str(CACHE_HEADER);
    out.push('\n');
    out.push_str(&format!("key {}\n", cache_key(&group.generators, group.mode)));
    out.push_str(&format!("mode {}\n", mode_name(group.mode)));
    out.push_str(&format!("size {n}\n"));
    out.push_str(&format!("order {}\n", group.order()));
    for (i, m) in group.elements.iter().enumerate() {
        out.push_str(&format!("m {} {}\n", i, m.to_text()));
    }
    out.push_str("end\n");
    out
}

fn mode_name(mode: ClosureMode) -> &'static str {
    match mode {
        ClosureMode::Exact => "exact",
        ClosureMode::Projective => "projective",
    }
}

/// Parsed cache contents; the generators are not stored, only their key.
#[derive(Clone, Debug)]
pub struct GroupDump {
    pub key: String,
    pub mode: ClosureMode,
    pub size: usize,
    pub elements: Vec<CycloMatrix>,
}

pub fn parse_group(text: &str) -> Result<GroupDump, GroupError> {
    let bad = |line: usize, why: &str| GroupError::Cache(format!("line {line}: {why}"));
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let mut next = |what: &str| lines.next().ok_or_else(|| GroupError::Cache(format!("missing {what}")));
    let (ln, header) = next("header")?;
    if header != CACHE_HEADER {
        return Err(bad(ln, "unknown header"));
    }
    let field = |(ln, line): (usize, &str), name: &str| -> Result<String, GroupError> {
        line.strip_prefix(name)
            .and_then(|r| r.strip_prefix(' '))
            .map(str::to_string)
            .ok_or_else(|| bad(ln, &format!("expected {name}")))
    };
    let key = field(next("key")?, "key")?;
    if key.len() != 64 || !key.bytes().all(|b| b.is_ascii_hexdigit()) {
        return Err(GroupError::Cache("malformed key".into()));
    }
    let mode = match field(next("mode")?, "mode")?.as_str() {
        "exact" => ClosureMode::Exact,
        "projective" => ClosureMode::Projective,
        _ => return Err(GroupError::Cache("unknown mode".into())),
    };
    let l = next("size")?;
    let size: usize = field(l, "size")?.parse().map_err(|_| bad(l.0, "size"))?;
    if size == 0 || size > 16 {
        return Err(bad(l.0, "size out of range"));
    }
    let l = next("order")?;
    let order: usize = field(l, "order")?.parse().map_err(|_| bad(l.0, "order"))?;
    if order > 100_000 {
        return Err(bad(l.0, "order out of range"));
    }
    let mut elements = Vec::with_capacity(order.min(4096));
    for idx in 0..order {
        let (ln, line) = next("matrix record")?;
        let mut parts = line.split(' ');
        if parts.next() != Some("m") {
            return Err(bad(ln, "expected matrix record"));
        }
        if parts.next().and_then(|s| s.parse::<usize>().ok()) != Some(idx) {
            return Err(bad(ln, "record index out of sequence"));
        }
        let entries: Vec<&str> = parts.collect();
        if entries.len() != size * size {
            return Err(bad(ln, "wrong entry count"));
        }
        let mut rows = Vec::with_capacity(size);
        for chunk in entries.chunks(size) {
            let row: Result<Vec<CyclotomicNumber>, _> =
                chunk.iter().map(|e| CyclotomicNumber::parse_text(e)).collect();
            rows.push(row.map_err(|e| bad(ln, &e.to_string()))?);
        }
        elements.push(CycloMatrix::from_rows(rows)?);
    }
    let (ln, end) = next("end marker")?;
    if end != "end" {
        return Err(bad(ln, "expected end"));
    }
    Ok(GroupDump {
        key,
        mode,
        size,
        elements,
    })
}

/// Loads a cached closure if the file exists and its key matches; otherwise
/// computes it with `build` and writes the file.
pub fn load_or_build(
    path: &Path,
    generators: &[CycloMatrix],
    mode: ClosureMode,
    rebuild: bool,
    build: impl FnOnce() -> Result<MatrixGroup, GroupError>,
) -> Result<(MatrixGroup, CacheStatus), GroupError> {
    let key = cache_key(generators, mode);
    if !rebuild {
        if let Ok(text) = fs::read_to_string(path) {
            match parse_group(&text) {
                Ok(dump) if dump.key == key && dump.mode == mode => {
                    return Ok((
                        MatrixGroup {
                            generators: generators.to_vec(),
                            elements: dump.elements,
                            mode,
                        },
                        CacheStatus::Hit,
                    ));
                }
                _ => {}
            }
        }
    }
    let group = build()?;
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir).map_err(|e| GroupError::Cache(e.to_string()))?;
    }
    fs::write(path, write_group(&group)).map_err(|e| GroupError::Cache(e.to_string()))?;
    Ok((group, CacheStatus::Built))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CacheStatus {
    Hit,
    Built,
}
