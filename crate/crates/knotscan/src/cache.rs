//! On-disk caches: family registries as JSON-lines and the certified
//! not-knotted store. Cache files are content-addressed by a hash of the
//! seed, move set and engine version, so a stale cache is simply never
//! found and regenerates silently. Correctness never depends on a cache.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::canon::canonical_form;
use crate::classify::CertifiedStore;
use crate::graph::Graph;
use crate::graph6;
use crate::ty::{FamilyMember, FamilyRegistry, Move, MoveSet};

pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Cache directory resolution: explicit flag, then KNOTSCAN_CACHE, then
/// `.knotscan-cache` under the working directory.
pub fn cache_dir(explicit: Option<&Path>) -> PathBuf {
    if let Some(p) = explicit {
        return p.to_path_buf();
    }
    if let Ok(env) = std::env::var("KNOTSCAN_CACHE") {
        if !env.is_empty() {
            return PathBuf::from(env);
        }
    }
    PathBuf::from(".knotscan-cache")
}

fn fnv1a(bytes: &[u8]) -> u64 {
    let mut hash: u64 = 0xcbf29ce484222325;
    for &b in bytes {
        hash ^= b as u64;
        hash = hash.wrapping_mul(0x100000001b3);
    }
    hash
}

fn registry_file(dir: &Path, name: &str, seed: &Graph, moves: MoveSet) -> PathBuf {
    let moves_tag = match moves {
        MoveSet::DeltaYOnly => "dy",
        MoveSet::Both => "dy-yd",
    };
    let key = format!("{}|{}|{}", graph6::encode(seed), moves_tag, ENGINE_VERSION);
    dir.join(format!("{}-{:016x}.jsonl", name, fnv1a(key.as_bytes())))
}

#[derive(Serialize, Deserialize)]
struct MemberLine {
    name: String,
    graph6: String,
    degseq: Vec<usize>,
    moves_from_seed: Vec<Move>,
    positional: bool,
}

#[derive(Serialize, Deserialize)]
struct HeaderLine {
    registry: String,
    seed: String,
    moves: MoveSet,
    engine: String,
    provenance: String,
}

pub fn save_registry(dir: &Path, reg: &FamilyRegistry) -> std::io::Result<PathBuf> {
    fs::create_dir_all(dir)?;
    let path = registry_file(dir, &reg.name, &reg.seed, reg.moves);
    let mut f = fs::File::create(&path)?;
    let header = HeaderLine {
        registry: reg.name.clone(),
        seed: graph6::encode(&reg.seed),
        moves: reg.moves,
        engine: ENGINE_VERSION.to_string(),
        provenance: reg.provenance.clone(),
    };
    writeln!(f, "{}", serde_json::to_string(&header)?)?;
    for m in &reg.members {
        let line = MemberLine {
            name: m.name.clone(),
            graph6: graph6::encode(&m.graph),
            degseq: m.degseq.clone(),
            moves_from_seed: m.path.clone(),
            positional: m.positional,
        };
        writeln!(f, "{}", serde_json::to_string(&line)?)?;
    }
    Ok(path)
}

/// Load a cached registry if present and intact; any parse failure is
/// treated as a miss so the caller regenerates.
pub fn load_registry(
    dir: &Path,
    name: &str,
    seed: &Graph,
    moves: MoveSet,
) -> Option<FamilyRegistry> {
    let path = registry_file(dir, name, seed, moves);
    let text = fs::read_to_string(&path).ok()?;
    let mut lines = text.lines();
    let header: HeaderLine = serde_json::from_str(lines.next()?).ok()?;
    if header.engine != ENGINE_VERSION || header.moves != moves {
        return None;
    }
    let mut members = Vec::new();
    for line in lines {
        if line.trim().is_empty() {
            continue;
        }
        let m: MemberLine = serde_json::from_str(line).ok()?;
        let graph = graph6::decode(&m.graph6).ok()?;
        members.push(FamilyMember {
            name: m.name,
            positional: m.positional,
            canon: canonical_form(&graph),
            degseq: m.degseq,
            path: m.moves_from_seed,
            graph,
        });
    }
    Some(FamilyRegistry {
        name: name.to_string(),
        seed: seed.clone(),
        moves,
        members,
        provenance: header.provenance,
    })
}

pub fn save_certified(dir: &Path, store: &CertifiedStore) -> std::io::Result<PathBuf> {
    fs::create_dir_all(dir)?;
    let path = dir.join(format!("certified-{}.jsonl", ENGINE_VERSION));
    let mut f = fs::File::create(&path)?;
    for enc in store.encodings() {
        writeln!(f, "{}", enc)?;
    }
    Ok(path)
}

/// Merge certified graphs from disk into the store. Corrupt lines are
/// skipped with a warning on stderr.
pub fn load_certified(dir: &Path, store: &CertifiedStore) {
    let path = dir.join(format!("certified-{}.jsonl", ENGINE_VERSION));
    let Ok(text) = fs::read_to_string(&path) else {
        return;
    };
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        match graph6::decode(line) {
            Ok(g) => store.insert(&g),
            Err(e) => eprintln!(
                "warning: skipping corrupt certified-store line in {}: {}",
                path.display(),
                e
            ),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ty::{closure, MoveSet};

    #[test]
    fn registry_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let seed = Graph::complete(6).unwrap();
        let mut reg = closure(&seed, MoveSet::Both, 1000).unwrap();
        reg.name = "test".into();
        save_registry(dir.path(), &reg).unwrap();
        let loaded = load_registry(dir.path(), "test", &seed, MoveSet::Both).unwrap();
        assert_eq!(loaded.members.len(), reg.members.len());
        for (a, b) in loaded.members.iter().zip(&reg.members) {
            assert_eq!(a.name, b.name);
            assert_eq!(a.canon, b.canon);
            assert_eq!(a.path, b.path);
        }
        // wrong moves tag is a miss
        assert!(load_registry(dir.path(), "test", &seed, MoveSet::DeltaYOnly).is_none());
    }

    #[test]
    fn certified_round_trip_and_corruption() {
        let dir = tempfile::tempdir().unwrap();
        let store = CertifiedStore::new();
        store.insert(&Graph::complete(4).unwrap());
        store.insert(&Graph::complete(5).unwrap());
        let path = save_certified(dir.path(), &store).unwrap();
        // corrupt one line
        let mut text = fs::read_to_string(&path).unwrap();
        text.push_str("\u{1}bogus\n");
        fs::write(&path, text).unwrap();
        let restored = CertifiedStore::new();
        load_certified(dir.path(), &restored);
        assert_eq!(restored.len(), 2);
    }

    #[test]
    fn cache_dir_resolution() {
        assert_eq!(
            cache_dir(Some(Path::new("/tmp/x"))),
            PathBuf::from("/tmp/x")
        );
    }
}
