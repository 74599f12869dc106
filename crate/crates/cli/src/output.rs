//! Reading inputs and writing outputs atomically.

use std::io::Write;
use std::path::Path;

use sha2::{Digest, Sha256};
use tempfile::NamedTempFile;

use crate::failure::{Failure, Outcome};
use focal_core::oracle::ParametricModel;
use focal_core::system::read_system;
use focal_core::MatrixSystem;

pub fn read_text(path: &str) -> Outcome<String> {
    std::fs::read_to_string(path).map_err(|e| Failure::Format(format!("{path}: {e}")))
}

pub fn load_system(path: &str) -> Outcome<(MatrixSystem, String)> {
    let text = read_text(path)?;
    let sys = read_system(&text).map_err(|e| Failure::input(path, e))?;
    Ok((sys, text))
}

pub fn load_model(path: &str) -> Outcome<ParametricModel> {
    let text = read_text(path)?;
    ParametricModel::from_json(&text).map_err(|e| Failure::input(path, e))
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    format!("{:x}", Sha256::digest(bytes))
}

/// Writes through a temporary file in the target directory, then renames.
pub fn write_atomic(path: &str, contents: &str) -> Outcome {
    let target = Path::new(path);
    let dir = match target.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let fail = |e: std::io::Error| Failure::Format(format!("{path}: {e}"));
    let mut tmp = NamedTempFile::new_in(dir).map_err(fail)?;
    tmp.write_all(contents.as_bytes()).map_err(fail)?;
    tmp.as_file().sync_all().map_err(fail)?;
    tmp.persist(target).map_err(|e| fail(e.error))?;
    Ok(())
}

/// Writes to `path` when given, to stdout otherwise.
pub fn emit(path: Option<&str>, contents: &str) -> Outcome {
    match path {
        Some(p) => write_atomic(p, contents),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(contents.as_bytes())?;
            out.flush()?;
            Ok(())
        }
    }
}
