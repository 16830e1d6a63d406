use std::io::Write;
use std::path::Path;

use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

pub const FORMAT_VERSION: u32 = 1;

pub struct Completed {
    pub passed: bool,
    pub document: Value,
}

/// An error that ends the run, with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub kind: &'static str,
    pub message: String,
}

impl Failure {
    pub fn invalid(message: impl Into<String>) -> Self {
        Self { code: 2, kind: "invalid_input", message: message.into() }
    }

    pub fn document(&self) -> Value {
        json!({
            "error": { "kind": self.kind, "message": self.message },
            "format_version": FORMAT_VERSION,
            "status": "error",
            "version": env!("CARGO_PKG_VERSION"),
        })
    }
}

impl From<superalg::Error> for Failure {
    fn from(e: superalg::Error) -> Self {
        use superalg::Error as E;
        let (code, kind) = match &e {
            E::Unsupported(_) => (3, "unsupported"),
            E::DegreeCap { .. } => (3, "degree_cap"),
            E::ContextMismatch(_) => (2, "context_mismatch"),
            E::NotInvertible(_) => (2, "not_invertible"),
            E::InvalidInput(_) => (2, "invalid_input"),
            E::Inhomogeneous(_) => (2, "inhomogeneous"),
            E::SignatureMismatch(_) => (2, "signature_mismatch"),
            E::Shape(_) => (2, "shape"),
            E::Closure(_) => (2, "closure"),
            E::Degenerate(_) => (2, "degenerate"),
            E::Precondition(_) => (2, "precondition"),
        };
        Self { code, kind, message: e.to_string() }
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    format!("{:x}", Sha256::digest(bytes))
}

/// Collects what a verb read so that the report can name it.
#[derive(Default)]
pub struct Provenance {
    pub inputs: Vec<(String, String)>,
    pub params: Option<String>,
    pub seed: Option<u64>,
}

pub fn finish(
    verb: &str,
    prov: &Provenance,
    passed: bool,
    result: impl Serialize,
) -> Result<Completed, Failure> {
    let result = serde_json::to_value(result).map_err(|e| Failure::invalid(e.to_string()))?;
    let inputs: Vec<Value> =
        prov.inputs.iter().map(|(path, digest)| json!({ "path": path, "sha256": digest })).collect();
    let document = json!({
        "format_version": FORMAT_VERSION,
        "inputs": inputs,
        "params": prov.params,
        "result": result,
        "seed": prov.seed,
        "status": if passed { "ok" } else { "failed" },
        "verb": verb,
        "version": env!("CARGO_PKG_VERSION"),
    });
    Ok(Completed { passed, document })
}

pub fn write(doc: &Value, out: Option<&Path>) -> std::io::Result<()> {
    let mut text = serde_json::to_string_pretty(doc)?;
    text.push('\n');
    match out {
        Some(p) => std::fs::write(p, text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    }
}
