//! On-disk cache of section idempotents, one JSON file per partition.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::store::Section;
use crate::coeff::RatFn;
use crate::eval::{Matching, TangleVector};
use crate::young::YoungDiagram;

/// Bumped whenever the evaluation conventions or idempotent construction
/// change, which invalidates every cached file.
pub const FORMAT_VERSION: u32 = 1;
const CONVENTION: &str = "pos-neg=z(id-hook);loop=delta;kink=alpha;young=row-col";

#[derive(Serialize, Deserialize)]
struct Payload {
    version: u32,
    convention: String,
    n: usize,
    lambda: Vec<u32>,
    terms: Vec<(Matching, RatFn)>,
    qdim: RatFn,
}

#[derive(Serialize, Deserialize)]
struct Entry {
    payload: Payload,
    checksum: String,
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

fn key_of(lambda: &YoungDiagram) -> String {
    let mut h = Sha256::new();
    h.update(format!("{FORMAT_VERSION}|{CONVENTION}|{}|{:?}", lambda.size(), lambda.rows()));
    hex(&h.finalize())
}

fn checksum(p: &Payload) -> String {
    hex(&Sha256::digest(serde_json::to_vec(p).expect("serializable")))
}

pub fn path_for(dir: &Path, lambda: &YoungDiagram) -> PathBuf {
    dir.join(format!("idem-{}.json", &key_of(lambda)[..32]))
}

/// A cached section, or `None` if missing, stale or corrupt.
pub fn load_section(dir: &Path, lambda: &YoungDiagram) -> Option<Section> {
    let bytes = fs::read(path_for(dir, lambda)).ok()?;
    let e: Entry = serde_json::from_slice(&bytes).ok()?;
    let p = &e.payload;
    let fresh = p.version == FORMAT_VERSION
        && p.convention == CONVENTION
        && p.n == lambda.size()
        && p.lambda == lambda.rows()
        && checksum(p) == e.checksum;
    if !fresh {
        return None;
    }
    let n = lambda.size();
    let mut idempotent = TangleVector::zero(n, n);
    for (m, c) in &p.terms {
        if m.top() != n || m.bottom() != n {
            return None;
        }
        idempotent.add_term(m.clone(), c.clone());
    }
    Some(Section {
        lambda: lambda.clone(),
        idempotent,
        qdim: p.qdim.clone(),
    })
}

/// Writes atomically: a temporary file in `dir`, then a rename.
pub fn save_section(dir: &Path, s: &Section) -> std::io::Result<()> {
    static COUNTER: AtomicU64 = AtomicU64::new(0);
    let payload = Payload {
        version: FORMAT_VERSION,
        convention: CONVENTION.to_string(),
        n: s.lambda.size(),
        lambda: s.lambda.rows().to_vec(),
        terms: s.idempotent.iter().map(|(m, c)| (m.clone(), c.clone())).collect(),
        qdim: s.qdim.clone(),
    };
    let checksum = checksum(&payload);
    let bytes = serde_json::to_vec(&Entry { payload, checksum }).expect("serializable");
    fs::create_dir_all(dir)?;
    let tmp = dir.join(format!(
        ".tmp-{}-{}",
        std::process::id(),
        COUNTER.fetch_add(1, Ordering::Relaxed)
    ));
    let mut f = fs::File::create(&tmp)?;
    f.write_all(&bytes)?;
    f.sync_all()?;
    fs::rename(&tmp, path_for(dir, &s.lambda))
}
