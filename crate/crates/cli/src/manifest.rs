//! Plain-text key-value run manifests: the command, its configuration,
//! wall time, per-order counts, tool version, and input digests. Re-running
//! a command with a manifest's configuration reproduces its counts.

use sha2::{Digest, Sha256};
use std::fmt::Display;
use std::path::Path;
use std::time::Duration;
use vcrit_core::enumerate::CountTable;

pub struct Manifest {
    entries: Vec<(String, String)>,
}

impl Manifest {
    pub fn new(command: &str, wall: Duration) -> Manifest {
        let mut m = Manifest {
            entries: Vec::new(),
        };
        m.set("command", command);
        m.set("tool", format!("vcrit {}", env!("CARGO_PKG_VERSION")));
        m.set("wall_ms", wall.as_millis());
        m
    }

    pub fn set(&mut self, key: &str, value: impl Display) {
        self.entries.push((key.to_string(), value.to_string()));
    }

    pub fn add_counts(&mut self, counts: &CountTable) {
        for (n, c) in counts.rows() {
            self.set(&format!("count.{n}"), c);
        }
        self.set("total", counts.total());
    }

    pub fn add_input(&mut self, path: &Path) -> std::io::Result<()> {
        let bytes = std::fs::read(path)?;
        let digest = Sha256::digest(&bytes);
        self.set("input", path.display());
        self.set("input_sha256", format!("{digest:x}"));
        Ok(())
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.entries {
            out.push_str(k);
            out.push_str(" = ");
            out.push_str(v);
            out.push('\n');
        }
        out
    }

    pub fn write(&self, path: &Path) -> std::io::Result<()> {
        std::fs::write(path, self.render())
    }
}
