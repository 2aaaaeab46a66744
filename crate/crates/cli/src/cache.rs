//! On-disk cache of indecomposable tables, keyed by a hash of the quiver's
//! canonical JSON and the prime.

use std::collections::BTreeMap;
use std::path::Path;

use qrep::indec::TableData;
use qrep::{IndecTable, PrimeField, Quiver};
use sha2::{Digest, Sha256};

use crate::Failure;

type CacheFile = BTreeMap<String, TableData>;

pub fn key(q: &Quiver, field: PrimeField) -> String {
    let canonical = serde_json::to_string(q).expect("serializable quiver");
    let digest = Sha256::digest(canonical.as_bytes());
    let hex: String = digest.iter().take(8).map(|b| format!("{b:02x}")).collect();
    format!("{hex}-p{}", field.p())
}

fn read(path: &Path) -> Result<CacheFile, Failure> {
    match std::fs::read_to_string(path) {
        Ok(text) => serde_json::from_str(&text)
            .map_err(|e| Failure::Input(format!("{}: not a table cache: {e}", path.display()))),
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(CacheFile::new()),
        Err(e) => Err(Failure::Input(format!("{}: {e}", path.display()))),
    }
}

/// The cached table for `q` over `field`, building and storing it on a miss.
pub fn load_or_build(path: &Path, q: &Quiver, field: PrimeField) -> Result<IndecTable, Failure> {
    let mut entries = read(path)?;
    let k = key(q, field);
    if let Some(data) = entries.get(&k) {
        if data.quiver == *q && data.field == field {
            return Ok(IndecTable::from_data(data.clone())?);
        }
    }
    let table = IndecTable::build_with_field(q, field)?;
    entries.insert(k, table.to_data());
    let text = serde_json::to_string(&entries).expect("serializable cache");
    std::fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    Ok(table)
}
