//! Field snapshots: a JSON header plus one raw little-endian f64 binary file
//! per field component, written and read bit-exactly.

use std::fs;
use std::io::{BufWriter, Read, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::GridSpec;

pub const DTYPE: &str = "f64";
pub const LAYOUT: &str = "row-major physical samples";

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SnapshotHeader {
    pub dim: usize,
    #[serde(rename = "N")]
    pub n: usize,
    pub time: f64,
    pub fields: Vec<String>,
    pub dtype: String,
    pub layout: String,
}

impl SnapshotHeader {
    pub fn grid(&self) -> Result<GridSpec> {
        GridSpec::new(self.dim, self.n)
    }
}

/// Write named physical-sample arrays under `dir` (created if missing).
pub fn write_snapshot(dir: &Path, grid: GridSpec, time: f64, fields: &[(&str, &[f64])]) -> Result<()> {
    fs::create_dir_all(dir)?;
    let header = SnapshotHeader {
        dim: grid.dim,
        n: grid.points_per_axis,
        time,
        fields: fields.iter().map(|(name, _)| name.to_string()).collect(),
        dtype: DTYPE.to_string(),
        layout: LAYOUT.to_string(),
    };
    let f = fs::File::create(dir.join("header.json"))?;
    serde_json::to_writer_pretty(BufWriter::new(f), &header)?;
    for (name, data) in fields {
        if data.len() != grid.len() {
            return Err(Error::SnapshotMismatch(format!(
                "field {name} has {} samples, grid wants {}",
                data.len(),
                grid.len()
            )));
        }
        let mut w = BufWriter::new(fs::File::create(dir.join(format!("{name}.f64")))?);
        for v in *data {
            w.write_all(&v.to_le_bytes())?;
        }
        w.flush()?;
    }
    Ok(())
}

/// Read a snapshot back; field order follows the header.
pub fn read_snapshot(dir: &Path) -> Result<(SnapshotHeader, Vec<Vec<f64>>)> {
    let text = fs::read_to_string(dir.join("header.json"))?;
    let header: SnapshotHeader = serde_json::from_str(&text)?;
    if header.dtype != DTYPE || header.layout != LAYOUT {
        return Err(Error::SnapshotMismatch(format!(
            "unsupported dtype/layout {}/{}",
            header.dtype, header.layout
        )));
    }
    let grid = header.grid()?;
    let mut fields = Vec::with_capacity(header.fields.len());
    for name in &header.fields {
        let mut bytes = Vec::new();
        fs::File::open(dir.join(format!("{name}.f64")))?.read_to_end(&mut bytes)?;
        if bytes.len() != grid.len() * 8 {
            return Err(Error::SnapshotMismatch(format!(
                "field {name}: {} bytes, expected {}",
                bytes.len(),
                grid.len() * 8
            )));
        }
        let data: Vec<f64> = bytes
            .chunks_exact(8)
            .map(|c| f64::from_le_bytes(c.try_into().expect("chunk of 8")))
            .collect();
        fields.push(data);
    }
    Ok((header, fields))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_is_bit_exact() {
        let dir = tempfile::tempdir().unwrap();
        let grid = GridSpec::new(2, 8).unwrap();
        let a: Vec<f64> = (0..grid.len()).map(|i| (i as f64).sin() * 1e-7 + 0.1).collect();
        let b: Vec<f64> = (0..grid.len()).map(|i| (i as f64 * 0.3).cos()).collect();
        write_snapshot(dir.path(), grid, 0.25, &[("u0", &a), ("u1", &b)]).unwrap();
        let (header, fields) = read_snapshot(dir.path()).unwrap();
        assert_eq!(header.time, 0.25);
        assert_eq!(header.fields, vec!["u0", "u1"]);
        for (orig, back) in [(&a, &fields[0]), (&b, &fields[1])] {
            for (x, y) in orig.iter().zip(back.iter()) {
                assert_eq!(x.to_bits(), y.to_bits());
            }
        }
    }

    #[test]
    fn truncated_file_is_a_mismatch() {
        let dir = tempfile::tempdir().unwrap();
        let grid = GridSpec::new(2, 8).unwrap();
        let a = vec![1.0; grid.len()];
        write_snapshot(dir.path(), grid, 0.0, &[("u0", &a)]).unwrap();
        let path = dir.path().join("u0.f64");
        let bytes = fs::read(&path).unwrap();
        fs::write(&path, &bytes[..bytes.len() - 8]).unwrap();
        assert!(matches!(read_snapshot(dir.path()), Err(Error::SnapshotMismatch(_))));
    }
}
