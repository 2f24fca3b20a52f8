//! Seeded random instances with planted witnesses.
//!
//! [`generate_planted`] lays out the witness `X` as vertices
//! `0..witness_size` and the outside as `witness_size..n`, builds `g − X`
//! inside the witness kind's graph class, and wires everything else (edges
//! inside `X`, edges between `X` and the outside) independently with the
//! configured probability. All randomness comes from a [`ChaCha8Rng`]
//! seeded with the config's 64-bit seed and is drawn in a fixed order, so
//! equal configs produce identical instances on every platform.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;
use crate::witness::{Witness, WitnessKind};

/// What to generate. The witness occupies ids `0..witness_size`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneratorConfig {
    /// Which structural class `g − X` is drawn from.
    pub kind: WitnessKind,
    /// `|X|`.
    pub witness_size: usize,
    /// Number of vertices outside the witness.
    pub outside_size: usize,
    /// Probability of each free edge (inside `X`, and `X`–outside where the
    /// kind allows per-vertex wiring). Clamped to `[0, 1]`.
    pub edge_probability: f64,
    /// Seed for the deterministic generator.
    pub seed: u64,
}

/// Largest clique/part size the partition-based kinds draw.
const MAX_GROUP: usize = 5;

/// Splits `0..count` into consecutive groups of random sizes `1..=MAX_GROUP`.
fn random_groups(rng: &mut ChaCha8Rng, count: usize) -> Vec<Vec<usize>> {
    let mut groups = Vec::new();
    let mut next = 0;
    while next < count {
        let size = rng.random_range(1..=MAX_GROUP.min(count - next));
        groups.push((next..next + size).collect());
        next += size;
    }
    groups
}

/// Generates a graph together with a valid planted witness of `cfg.kind`.
///
/// Draw order (fixed for determinism): edges inside `X` by ascending pair,
/// then the outside partition where the kind has one, then the `X`-contacts
/// by ascending outside vertex (or group, for twin covers) and ascending
/// witness vertex.
pub fn generate_planted(cfg: &GeneratorConfig) -> (Graph, Witness) {
    let k = cfg.witness_size;
    let n = k + cfg.outside_size;
    let p = cfg.edge_probability.clamp(0.0, 1.0);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut edges: Vec<(usize, usize)> = Vec::new();

    for u in 0..k {
        for v in u + 1..k {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }

    // Outside ids are offsets 0..outside_size here; shifted by k below.
    let outside: Vec<usize> = (0..cfg.outside_size).collect();
    let mut outside_edges: Vec<(usize, usize)> = Vec::new();
    let mut per_vertex_contacts = true;
    match cfg.kind {
        WitnessKind::VertexCover => {}
        WitnessKind::ModClique => {
            for &u in &outside {
                for &v in &outside {
                    if u < v {
                        outside_edges.push((u, v));
                    }
                }
            }
        }
        WitnessKind::ModCluster => {
            for group in random_groups(&mut rng, cfg.outside_size) {
                for &u in &group {
                    for &v in &group {
                        if u < v {
                            outside_edges.push((u, v));
                        }
                    }
                }
            }
        }
        WitnessKind::ModCoCluster => {
            let parts = random_groups(&mut rng, cfg.outside_size);
            for (i, part) in parts.iter().enumerate() {
                for other in &parts[i + 1..] {
                    for &u in part {
                        for &v in other {
                            outside_edges.push((u.min(v), u.max(v)));
                        }
                    }
                }
            }
        }
        WitnessKind::TwinCover => {
            // Members of a clique must be true twins, so each group shares
            // one X-contact pattern drawn per group.
            per_vertex_contacts = false;
            for group in random_groups(&mut rng, cfg.outside_size) {
                for &u in &group {
                    for &v in &group {
                        if u < v {
                            outside_edges.push((u, v));
                        }
                    }
                }
                let contacts: Vec<usize> =
                    (0..k).filter(|_| rng.random_bool(p)).collect();
                for &u in &group {
                    for &x in &contacts {
                        edges.push((x, k + u));
                    }
                }
            }
        }
        WitnessKind::ModLinearForest | WitnessKind::ModPath | WitnessKind::DominatingSet => {
            panic!("generate_planted supports the five kernelization kinds only");
        }
    }
    edges.extend(outside_edges.into_iter().map(|(u, v)| (k + u, k + v)));

    if per_vertex_contacts {
        for u in 0..cfg.outside_size {
            for x in 0..k {
                if rng.random_bool(p) {
                    edges.push((x, k + u));
                }
            }
        }
    }

    let graph = Graph::from_edges(n, &edges).expect("construction yields simple edges");
    let witness = Witness::new(cfg.kind, (0..k).collect());
    debug_assert!(witness.is_valid_for(&graph));
    (graph, witness)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(kind: WitnessKind, outside: usize, seed: u64) -> GeneratorConfig {
        GeneratorConfig {
            kind,
            witness_size: 3,
            outside_size: outside,
            edge_probability: 0.4,
            seed,
        }
    }

    #[test]
    fn planted_witnesses_validate_for_every_kind() {
        for kind in [
            WitnessKind::VertexCover,
            WitnessKind::TwinCover,
            WitnessKind::ModCluster,
            WitnessKind::ModClique,
            WitnessKind::ModCoCluster,
        ] {
            for seed in 0..20 {
                let (g, w) = generate_planted(&config(kind, 30, seed));
                assert_eq!(g.n(), 33);
                assert!(w.is_valid_for(&g), "{kind:?} seed {seed}");
            }
        }
    }

    #[test]
    fn equal_seeds_give_identical_instances() {
        let cfg = config(WitnessKind::ModCluster, 40, 7);
        assert_eq!(generate_planted(&cfg), generate_planted(&cfg));
        let other = GeneratorConfig { seed: 8, ..cfg };
        assert_ne!(generate_planted(&cfg), generate_planted(&other));
    }

    #[test]
    fn outside_structure_matches_the_kind() {
        let (g, w) = generate_planted(&config(WitnessKind::VertexCover, 25, 3));
        let outside: Vec<usize> = (3..g.n()).collect();
        assert!(g.is_stable_set(&outside));
        assert_eq!(w.vertices(), &[0, 1, 2]);

        let (g, _) = generate_planted(&config(WitnessKind::ModClique, 25, 3));
        assert!(g.is_clique(&(3..g.n()).collect::<Vec<_>>()));

        let (g, _) = generate_planted(&config(WitnessKind::ModCluster, 25, 3));
        for comp in g.components_avoiding(&[0, 1, 2]) {
            assert!(g.is_clique(&comp));
            assert!(comp.len() <= MAX_GROUP);
        }
    }

    #[test]
    fn degenerate_sizes_are_fine() {
        let (g, w) = generate_planted(&config(WitnessKind::TwinCover, 0, 1));
        assert_eq!(g.n(), 3);
        assert!(w.is_valid_for(&g));
        let empty = GeneratorConfig {
            kind: WitnessKind::VertexCover,
            witness_size: 0,
            outside_size: 0,
            edge_probability: 0.5,
            seed: 0,
        };
        let (g, w) = generate_planted(&empty);
        assert_eq!(g.n(), 0);
        assert!(w.is_valid_for(&g));
    }
}
