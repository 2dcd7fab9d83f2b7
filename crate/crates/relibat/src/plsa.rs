//! Layered search deciding source-sink connectivity of the subgraph induced
//! by a state vector.
//!
//! Starting from layer `{source}`, each round collects the unvisited nodes
//! reachable over working arcs from the previous layer. The vector is
//! connected once the sink enters a layer and disconnected as soon as a
//! layer comes up empty. Each node enters at most one layer, so the work is
//! linear in the live part of the graph.

use crate::error::{Error, Result};
use crate::network::Network;

/// Connectivity verdict for a state vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Connected,
    Disconnected,
}

/// Full record of a layered search: the node layers in discovery order and
/// the final verdict. Layers are listed in ascending node id, so traces are
/// reproducible; the verdict itself is order-independent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayerTrace {
    pub layers: Vec<Vec<usize>>,
    pub verdict: Verdict,
}

/// Reusable buffers for connectivity queries. Estimators run millions of
/// queries per call, so the visited marks use an epoch counter instead of
/// being cleared every time.
#[derive(Debug, Clone)]
pub struct Workspace {
    visited: Vec<u32>,
    epoch: u32,
    frontier: Vec<usize>,
    next: Vec<usize>,
}

impl Workspace {
    pub fn new(network: &Network) -> Self {
        Self {
            visited: vec![0; network.node_count() + 1],
            epoch: 0,
            frontier: Vec::with_capacity(network.node_count()),
            next: Vec::with_capacity(network.node_count()),
        }
    }

    /// Layered-search connectivity of `G(states)` between source and sink.
    pub fn is_connected(&mut self, network: &Network, states: &[bool]) -> bool {
        debug_assert_eq!(states.len(), network.arc_count());
        if self.epoch == u32::MAX {
            self.visited.iter_mut().for_each(|v| *v = 0);
            self.epoch = 0;
        }
        self.epoch += 1;
        let epoch = self.epoch;
        let sink = network.sink();

        self.frontier.clear();
        self.frontier.push(network.source());
        self.visited[network.source()] = epoch;
        if network.source() == sink {
            return true;
        }
        loop {
            self.next.clear();
            for &node in &self.frontier {
                for &(neighbor, arc) in network.neighbors(node) {
                    if states[arc] && self.visited[neighbor] != epoch {
                        if neighbor == sink {
                            return true;
                        }
                        self.visited[neighbor] = epoch;
                        self.next.push(neighbor);
                    }
                }
            }
            if self.next.is_empty() {
                return false;
            }
            std::mem::swap(&mut self.frontier, &mut self.next);
        }
    }
}

/// One-shot connectivity check. Allocates a fresh workspace; estimators keep
/// their own.
pub fn is_connected(network: &Network, states: &[bool]) -> Result<bool> {
    check_len(network, states)?;
    Ok(Workspace::new(network).is_connected(network, states))
}

/// Connectivity check that records every layer. Unlike the hot-path check,
/// the search completes the layer containing the sink before halting, and
/// nodes within a layer are sorted by id.
pub fn trace(network: &Network, states: &[bool]) -> Result<LayerTrace> {
    check_len(network, states)?;
    let sink = network.sink();
    let mut visited = vec![false; network.node_count() + 1];
    let mut layers: Vec<Vec<usize>> = vec![vec![network.source()]];
    visited[network.source()] = true;

    loop {
        let previous = layers.last().unwrap();
        if previous.contains(&sink) {
            return Ok(LayerTrace {
                layers,
                verdict: Verdict::Connected,
            });
        }
        let mut layer: Vec<usize> = Vec::new();
        for &node in previous {
            for &(neighbor, arc) in network.neighbors(node) {
                if states[arc] && !visited[neighbor] {
                    visited[neighbor] = true;
                    layer.push(neighbor);
                }
            }
        }
        if layer.is_empty() {
            return Ok(LayerTrace {
                layers,
                verdict: Verdict::Disconnected,
            });
        }
        layer.sort_unstable();
        layers.push(layer);
    }
}

fn check_len(network: &Network, states: &[bool]) -> Result<()> {
    if states.len() != network.arc_count() {
        return Err(Error::LengthMismatch {
            got: states.len(),
            expected: network.arc_count(),
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::network::parse_network;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha12Rng;
    use std::collections::VecDeque;

    fn bridge() -> Network {
        parse_network("4 5\n1 2\n1 3\n2 3\n2 4\n3 4\n")
            .unwrap()
            .network
    }

    /// Plain breadth-first-search oracle, independent of the layered search.
    fn bfs_connected(network: &Network, states: &[bool]) -> bool {
        let mut seen = vec![false; network.node_count() + 1];
        let mut queue = VecDeque::from([network.source()]);
        seen[network.source()] = true;
        while let Some(node) = queue.pop_front() {
            if node == network.sink() {
                return true;
            }
            for &(neighbor, arc) in network.neighbors(node) {
                if states[arc] && !seen[neighbor] {
                    seen[neighbor] = true;
                    queue.push_back(neighbor);
                }
            }
        }
        false
    }

    fn random_network(rng: &mut impl Rng, max_nodes: usize, max_arcs: usize) -> Network {
        loop {
            let n = rng.gen_range(2..=max_nodes);
            // Random spanning tree first so every node touches an arc.
            let mut arcs: Vec<(usize, usize)> = Vec::new();
            for v in 2..=n {
                let u = rng.gen_range(1..v);
                arcs.push((u, v));
            }
            let extra = rng.gen_range(0..=max_arcs.saturating_sub(arcs.len()));
            for _ in 0..extra {
                let u = rng.gen_range(1..=n);
                let v = rng.gen_range(1..=n);
                if u != v
                    && !arcs
                        .iter()
                        .any(|&(a, b)| (a.min(b), a.max(b)) == (u.min(v), u.max(v)))
                {
                    arcs.push((u, v));
                }
            }
            if arcs.len() <= max_arcs {
                return Network::new(n, arcs).unwrap();
            }
        }
    }

    #[test]
    fn all_working_bridge_layers() {
        let net = bridge();
        let trace = trace(&net, &[true; 5]).unwrap();
        assert_eq!(trace.verdict, Verdict::Connected);
        assert_eq!(trace.layers, vec![vec![1], vec![2, 3], vec![4]]);
    }

    #[test]
    fn no_arcs_is_disconnected() {
        let net = bridge();
        let trace = trace(&net, &[false; 5]).unwrap();
        assert_eq!(trace.verdict, Verdict::Disconnected);
        assert_eq!(trace.layers, vec![vec![1]]);
        assert!(!is_connected(&net, &[false; 5]).unwrap());
    }

    #[test]
    fn worked_verdicts_from_simulation_tables() {
        let net = bridge();
        // (1,1,1,0,0): nodes {1,2,3} reachable, sink 4 is not.
        assert!(!is_connected(&net, &[true, true, true, false, false]).unwrap());
        // (1,0,0,1,0): 1-2 then 2-4.
        assert!(is_connected(&net, &[true, false, false, true, false]).unwrap());
    }

    #[test]
    fn length_mismatch_is_an_error() {
        let net = bridge();
        assert!(is_connected(&net, &[true; 4]).is_err());
        assert!(trace(&net, &[true; 6]).is_err());
    }

    #[test]
    fn matches_bfs_oracle_on_random_graphs() {
        let mut rng = ChaCha12Rng::seed_from_u64(0x5eed);
        for _ in 0..500 {
            let net = random_network(&mut rng, 30, 60);
            let mut ws = Workspace::new(&net);
            for _ in 0..4 {
                let states: Vec<bool> =
                    (0..net.arc_count()).map(|_| rng.gen_bool(0.5)).collect();
                let expected = bfs_connected(&net, &states);
                assert_eq!(is_connected(&net, &states).unwrap(), expected);
                let trace = trace(&net, &states).unwrap();
                assert_eq!(trace.verdict == Verdict::Connected, expected);
                // Reused workspace agrees with the one-shot path.
                assert_eq!(ws.is_connected(&net, &states), expected);
            }
        }
    }

    #[test]
    fn connectivity_is_monotone_in_states() {
        let mut rng = ChaCha12Rng::seed_from_u64(41);
        for _ in 0..200 {
            let net = random_network(&mut rng, 12, 24);
            let lower: Vec<bool> = (0..net.arc_count()).map(|_| rng.gen_bool(0.4)).collect();
            let upper: Vec<bool> = lower
                .iter()
                .map(|&b| b || rng.gen_bool(0.5))
                .collect();
            if is_connected(&net, &lower).unwrap() {
                assert!(is_connected(&net, &upper).unwrap());
            }
        }
    }

    #[test]
    fn layers_are_disjoint_and_start_at_source() {
        let mut rng = ChaCha12Rng::seed_from_u64(99);
        for _ in 0..100 {
            let net = random_network(&mut rng, 12, 24);
            let states: Vec<bool> = (0..net.arc_count()).map(|_| rng.gen_bool(0.6)).collect();
            let trace = trace(&net, &states).unwrap();
            assert_eq!(trace.layers[0], vec![net.source()]);
            let mut seen = std::collections::HashSet::new();
            for layer in &trace.layers {
                assert!(!layer.is_empty());
                for &node in layer {
                    assert!(seen.insert(node), "node {node} in two layers");
                }
            }
        }
    }
}
